#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>

#include "fracvar/fractional_order.hpp"

namespace fracvar {

/// Pointwise function of (t, x, d), where d stands for the value of the
/// left Riemann-Liouville derivative of x at t.
using PointFn = std::function<double(double t, double x, double d)>;

/// An integrand together with its partial derivatives in x and d.
struct Integrand {
  PointFn value;
  PointFn dx;
  PointFn dd;
};

/// Wrap a plain integrand with central-finite-difference partials,
/// step (1 + |v|) * cbrt(machine epsilon) in each direction.
Integrand with_finite_difference_partials(PointFn value);

/// F = L + lambda * g, the auxiliary integrand of the isoperimetric method.
Integrand augmented_integrand(const Integrand& lagrangian, const Integrand& g,
                              double lambda);

/// Statement of the basic problem: extremize the integral of
/// L(t, x, D^alpha x) over [a, b] subject to x(a) = x_a, x(b) = x_b.
struct VariationalProblem {
  Integrand lagrangian;
  FractionalOrder alpha;
  double a;
  double b;
  double x_a;
  double x_b;
};

/// Integral constraint: integral of g(t, x, D^alpha x) over [a, b] = target.
struct IsoperimetricConstraint {
  Integrand integrand;
  double target;
};

/// Closed-form solution attached to a problem, for error reporting.
struct ExactSolution {
  std::function<double(double)> value;
  std::string description;
};

/// Largest relative deviation between the declared partials and central
/// finite differences of the value, over the given (t, x, d) probe points.
/// A consistent integrand stays below ~1e-5.
double max_partial_inconsistency(const Integrand& integrand,
                                 std::span<const std::array<double, 3>> probes);

}  // namespace fracvar
