#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracvar/dense_matrix.hpp"
#include "fracvar/gl_weights.hpp"
#include "fracvar/mesh.hpp"
#include "fracvar/problem.hpp"

namespace fracvar {

/// First-order spline (hat) variation eta_j, the j-th member of the variation
/// basis: 1 at node t_j, 0 at every other node and outside (t_{j-1}, t_{j+1}).
/// Valid for interior nodes 1 <= j <= n - 1.
double hat_variation(std::size_t j, const Mesh& mesh, double t);

/// Discrete Riemann-Liouville derivative of eta_j at node t_i:
/// h^{-alpha} w_{i-j} when j <= i, zero otherwise.
double hat_variation_gl_derivative(std::size_t j, std::size_t i,
                                   FractionalOrder alpha, const Mesh& mesh);

/// Residual of the discrete first-variation system. Entry j-1 (j = 1..n-1) is
///
///   r_j = dL/dx(t_j, x_j, D_j)
///       + h^{-alpha} * sum_{i=j}^{n} dL/dd(t_i, x_i, D_i) * w_{i-j},
///
/// with D_i the discrete derivative of the trajectory and the boundary values
/// x_0 = x_a, x_n = x_b taken from the problem. By construction r equals
/// (1/h) times the gradient of discretized_functional in the interior values.
std::vector<double> assemble_residual(const VariationalProblem& problem,
                                      const Mesh& mesh,
                                      std::span<const double> interior);

/// Same, reusing a weight sequence covering index mesh.n().
std::vector<double> assemble_residual(const VariationalProblem& problem,
                                      const Mesh& mesh, const GLWeights& weights,
                                      std::span<const double> interior);

/// Jacobian of assemble_residual by forward differences, column by column,
/// with step sqrt(machine epsilon) * (1 + |x_j|).
Matrix assemble_jacobian(const VariationalProblem& problem, const Mesh& mesh,
                         std::span<const double> interior);

Matrix assemble_jacobian(const VariationalProblem& problem, const Mesh& mesh,
                         const GLWeights& weights, std::span<const double> interior);

/// Right-endpoint discretization of the functional:
/// h * sum_{i=1}^{n} L(t_i, x_i, D_i) over full samples x_0..x_n.
double discretized_functional(const VariationalProblem& problem, const Mesh& mesh,
                              std::span<const double> samples);

/// h * sum_{i=1}^{n} g(t_i, x_i, D_i) - target, over full samples x_0..x_n.
double assemble_constraint_residual(const IsoperimetricConstraint& constraint,
                                    FractionalOrder alpha, const Mesh& mesh,
                                    std::span<const double> samples);

}  // namespace fracvar
