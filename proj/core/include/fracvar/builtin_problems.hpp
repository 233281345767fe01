#pragma once

#include <optional>
#include <string>

#include "fracvar/problem.hpp"

namespace fracvar {

/// A ready-made benchmark problem with its closed-form solution.
struct ExampleProblem {
  std::string name;
  VariationalProblem problem;
  std::optional<IsoperimetricConstraint> constraint;
  ExactSolution exact;
};

/// min integral of (D^0.5 x - 2 t^1.5 / Gamma(2.5))^2 on [0, 1],
/// x(0) = 0, x(1) = 1; minimizer x(t) = t^2. The algebraic system is linear.
ExampleProblem example_1();

/// Quartic tracking of the derivative of 16 t^5 - 20 t^3 + 5 t on [0, 1],
/// x(0) = 0, x(1) = 1; the system is nonlinear, the minimum value is zero.
ExampleProblem example_2();

/// Isoperimetric: min integral of t^4 + (D^0.5 x)^2 on [0, 1] subject to
/// integral of t^2 D^0.5 x = 1/5, x(0) = 0, x(1) = 16 / (15 Gamma(0.5));
/// minimizer x(t) = 16 t^2.5 / (15 Gamma(0.5)).
ExampleProblem example_3();

/// Example by id in {1, 2, 3}; throws InvalidArgument otherwise.
ExampleProblem builtin_example(int id);

}  // namespace fracvar
