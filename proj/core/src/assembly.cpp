#include "fracvar/assembly.hpp"

#include <cmath>

#include "fracvar/errors.hpp"
#include "fracvar/gl_derivative.hpp"

namespace fracvar {
namespace {

void require_matching_interval(const VariationalProblem& problem, const Mesh& mesh) {
  if (mesh.a() != problem.a || mesh.b() != problem.b) {
    throw InvalidArgument("mesh interval does not match the problem interval");
  }
}

std::vector<double> full_trajectory(double x_a, double x_b, const Mesh& mesh,
                                    std::span<const double> interior) {
  if (interior.size() != mesh.n() - 1) {
    throw InvalidArgument("interior vector must have n - 1 entries");
  }
  std::vector<double> x(mesh.n() + 1);
  x.front() = x_a;
  std::copy(interior.begin(), interior.end(), x.begin() + 1);
  x.back() = x_b;
  return x;
}

}  // namespace

double hat_variation(std::size_t j, const Mesh& mesh, double t) {
  if (j < 1 || j > mesh.n() - 1) {
    throw InvalidArgument("hat variation index must satisfy 1 <= j <= n - 1");
  }
  const double left = mesh.point(j - 1);
  const double center = mesh.point(j);
  const double right = mesh.point(j + 1);
  if (t >= left && t < center) return (t - left) / mesh.h();
  if (t >= center && t < right) return (right - t) / mesh.h();
  return 0.0;
}

double hat_variation_gl_derivative(std::size_t j, std::size_t i,
                                   FractionalOrder alpha, const Mesh& mesh) {
  if (j < 1 || j > mesh.n() - 1) {
    throw InvalidArgument("hat variation index must satisfy 1 <= j <= n - 1");
  }
  if (i > mesh.n()) {
    throw InvalidArgument("mesh point index out of range");
  }
  if (j > i) return 0.0;
  const GLWeights weights(alpha, i - j);
  return std::pow(mesh.h(), -alpha.value()) * weights[i - j];
}

std::vector<double> assemble_residual(const VariationalProblem& problem,
                                      const Mesh& mesh,
                                      std::span<const double> interior) {
  return assemble_residual(problem, mesh, GLWeights(problem.alpha, mesh.n()), interior);
}

std::vector<double> assemble_residual(const VariationalProblem& problem,
                                      const Mesh& mesh, const GLWeights& weights,
                                      std::span<const double> interior) {
  require_matching_interval(problem, mesh);
  const std::size_t n = mesh.n();
  const std::vector<double> x = full_trajectory(problem.x_a, problem.x_b, mesh, interior);
  const std::vector<double> d = rl_derivative_on_mesh(x, weights, mesh);

  const double inv_h_alpha = std::pow(mesh.h(), -problem.alpha.value());
  const std::span<const double> w = weights.values();
  const Integrand& L = problem.lagrangian;

  // dL/dd at every node; index 0 is never consumed below.
  std::vector<double> p(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[i] = L.dd(mesh.point(i), x[i], d[i]);
  }

  std::vector<double> r(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = j; i <= n; ++i) {
      acc += p[i] * w[i - j];
    }
    r[j - 1] = L.dx(mesh.point(j), x[j], d[j]) + inv_h_alpha * acc;
  }
  return r;
}

Matrix assemble_jacobian(const VariationalProblem& problem, const Mesh& mesh,
                         std::span<const double> interior) {
  return assemble_jacobian(problem, mesh, GLWeights(problem.alpha, mesh.n()), interior);
}

Matrix assemble_jacobian(const VariationalProblem& problem, const Mesh& mesh,
                         const GLWeights& weights, std::span<const double> interior) {
  const std::size_t m = mesh.n() - 1;
  const std::vector<double> base = assemble_residual(problem, mesh, weights, interior);

  constexpr double sqrt_eps = 1.4901161193847656e-8;  // sqrt(2^-52)
  std::vector<double> probe(interior.begin(), interior.end());
  Matrix jac(m, m);
  for (std::size_t col = 0; col < m; ++col) {
    const double saved = probe[col];
    const double step = sqrt_eps * (1.0 + std::fabs(saved));
    probe[col] = saved + step;
    const std::vector<double> shifted = assemble_residual(problem, mesh, weights, probe);
    probe[col] = saved;
    for (std::size_t row = 0; row < m; ++row) {
      jac(row, col) = (shifted[row] - base[row]) / step;
    }
  }
  return jac;
}

double discretized_functional(const VariationalProblem& problem, const Mesh& mesh,
                              std::span<const double> samples) {
  require_matching_interval(problem, mesh);
  const std::size_t n = mesh.n();
  if (samples.size() != n + 1) {
    throw InvalidArgument("discretized_functional: samples must have n + 1 entries");
  }
  const std::vector<double> d =
      rl_derivative_on_mesh(samples, problem.alpha, mesh);
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    acc += problem.lagrangian.value(mesh.point(i), samples[i], d[i]);
  }
  return mesh.h() * acc;
}

double assemble_constraint_residual(const IsoperimetricConstraint& constraint,
                                    FractionalOrder alpha, const Mesh& mesh,
                                    std::span<const double> samples) {
  const std::size_t n = mesh.n();
  if (samples.size() != n + 1) {
    throw InvalidArgument("constraint residual: samples must have n + 1 entries");
  }
  const std::vector<double> d = rl_derivative_on_mesh(samples, alpha, mesh);
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    acc += constraint.integrand.value(mesh.point(i), samples[i], d[i]);
  }
  return mesh.h() * acc - constraint.target;
}

}  // namespace fracvar
