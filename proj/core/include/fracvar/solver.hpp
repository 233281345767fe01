#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fracvar/mesh.hpp"
#include "fracvar/problem.hpp"

namespace fracvar {

struct SolverOptions {
  /// Stop once the residual max-norm falls to this level.
  double tol_residual = 1e-10;
  int max_iterations = 100;
  /// Backtracking line search: halve the Newton step (up to 30 times) until
  /// the residual norm decreases. Disabled, every step is a full step.
  bool damping = true;
  /// Starting interior trajectory x_1..x_{n-1}; linear interpolation between
  /// the boundary values when absent.
  std::optional<std::vector<double>> initial_guess;
};

struct Solution {
  Mesh mesh;
  /// Mesh values x_0..x_n; the boundary entries are the prescribed data,
  /// bit for bit.
  std::vector<double> values;
  /// Multiplier of the integral constraint; present iff isoperimetric.
  std::optional<double> lambda;
  int iterations = 0;
  double final_residual_norm = 0.0;
  bool converged = false;
  /// Max-norm of each accepted Newton step, in order.
  std::vector<double> step_norms;
  /// Residual max-norm at the start and after each accepted step.
  std::vector<double> residual_norms;
  /// Value of the discretized constraint equation at the returned iterate.
  std::optional<double> constraint_residual;
};

/// Newton solve of the discrete first-variation system for the basic problem.
///
/// Non-convergence within max_iterations returns the best iterate flagged
/// converged = false; a singular Jacobian throws SingularMatrixError.
Solution solve(const VariationalProblem& problem, std::size_t n,
               const SolverOptions& options = {});

/// Solve the isoperimetric problem: the stationarity system of the auxiliary
/// integrand L + lambda * g (normal case, lambda_0 = 1) augmented with the
/// discretized constraint equation, in the unknowns (x_1..x_{n-1}, lambda).
/// lambda starts at zero.
Solution solve_isoperimetric(const VariationalProblem& problem,
                             const IsoperimetricConstraint& constraint,
                             std::size_t n, const SolverOptions& options = {});

}  // namespace fracvar
