#include "fracvar/solver.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <utility>

#include "fracvar/assembly.hpp"
#include "fracvar/dense_matrix.hpp"
#include "fracvar/errors.hpp"
#include "fracvar/gl_weights.hpp"

namespace fracvar {
namespace {

using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;
using JacobianFn = std::function<Matrix(std::span<const double>)>;

double max_norm(std::span<const double> v) {
  double worst = 0.0;
  for (double e : v) worst = std::max(worst, std::fabs(e));
  return worst;
}

void validate(const SolverOptions& options, std::size_t unknown_count) {
  if (!(options.tol_residual > 0.0)) {
    throw InvalidArgument("tol_residual must be positive");
  }
  if (options.max_iterations < 1) {
    throw InvalidArgument("max_iterations must be at least 1");
  }
  if (options.initial_guess && options.initial_guess->size() != unknown_count) {
    throw InvalidArgument("initial guess must have one entry per interior node");
  }
}

Matrix fd_jacobian(const ResidualFn& residual, std::span<const double> u,
                   const std::vector<double>& base) {
  constexpr double sqrt_eps = 1.4901161193847656e-8;  // sqrt(2^-52)
  const std::size_t m = u.size();
  std::vector<double> probe(u.begin(), u.end());
  Matrix jac(m, m);
  for (std::size_t col = 0; col < m; ++col) {
    const double saved = probe[col];
    const double step = sqrt_eps * (1.0 + std::fabs(saved));
    probe[col] = saved + step;
    const std::vector<double> shifted = residual(probe);
    probe[col] = saved;
    for (std::size_t row = 0; row < m; ++row) {
      jac(row, col) = (shifted[row] - base[row]) / step;
    }
  }
  return jac;
}

struct NewtonOutcome {
  std::vector<double> best;
  double best_norm = 0.0;
  int iterations = 0;
  std::vector<double> step_norms{};
  std::vector<double> residual_norms{};
};

/// Damped Newton on a square residual system. Keeps the lowest-residual
/// iterate seen; stops on tolerance, iteration budget, or a stalled line
/// search (no decreasing step within 30 halvings).
NewtonOutcome newton_iterate(const ResidualFn& residual, const JacobianFn& jacobian,
                             std::vector<double> u, const SolverOptions& options) {
  std::vector<double> r = residual(u);
  double norm = max_norm(r);
  NewtonOutcome out{u, norm};
  out.residual_norms.push_back(norm);

  while (norm > options.tol_residual && out.iterations < options.max_iterations) {
    std::vector<double> rhs(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rhs[i] = -r[i];
    const std::vector<double> delta = lu_solve(jacobian(u), std::move(rhs));

    double scale = 1.0;
    std::vector<double> candidate(u.size());
    std::vector<double> r_candidate;
    double norm_candidate = std::numeric_limits<double>::infinity();
    if (options.damping) {
      bool decreased = false;
      for (int halvings = 0; halvings <= 30; ++halvings) {
        for (std::size_t i = 0; i < u.size(); ++i) candidate[i] = u[i] + scale * delta[i];
        r_candidate = residual(candidate);
        norm_candidate = max_norm(r_candidate);
        if (norm_candidate < norm) {
          decreased = true;
          break;
        }
        scale *= 0.5;
      }
      if (!decreased) break;
    } else {
      for (std::size_t i = 0; i < u.size(); ++i) candidate[i] = u[i] + delta[i];
      r_candidate = residual(candidate);
      norm_candidate = max_norm(r_candidate);
    }

    out.step_norms.push_back(scale * max_norm(delta));
    u = std::move(candidate);
    r = std::move(r_candidate);
    norm = norm_candidate;
    out.residual_norms.push_back(norm);
    ++out.iterations;
    if (norm < out.best_norm) {
      out.best = u;
      out.best_norm = norm;
    }
  }
  return out;
}

std::vector<double> linear_interpolation(const VariationalProblem& problem, std::size_t n) {
  std::vector<double> u(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    u[j - 1] = problem.x_a + (problem.x_b - problem.x_a) *
                                 (static_cast<double>(j) / static_cast<double>(n));
  }
  return u;
}

std::vector<double> with_boundaries(const VariationalProblem& problem,
                                    std::span<const double> interior) {
  std::vector<double> values(interior.size() + 2);
  values.front() = problem.x_a;
  std::copy(interior.begin(), interior.end(), values.begin() + 1);
  values.back() = problem.x_b;
  return values;
}

}  // namespace

Solution solve(const VariationalProblem& problem, std::size_t n,
               const SolverOptions& options) {
  if (n < 2) throw InvalidArgument("solve requires n >= 2");
  validate(options, n - 1);
  const Mesh mesh(problem.a, problem.b, n);
  const GLWeights weights(problem.alpha, n);

  const ResidualFn residual = [&](std::span<const double> u) {
    return assemble_residual(problem, mesh, weights, u);
  };
  const JacobianFn jacobian = [&](std::span<const double> u) {
    return assemble_jacobian(problem, mesh, weights, u);
  };

  std::vector<double> start =
      options.initial_guess ? *options.initial_guess : linear_interpolation(problem, n);
  NewtonOutcome outcome = newton_iterate(residual, jacobian, std::move(start), options);

  Solution solution{mesh,
                    with_boundaries(problem, outcome.best),
                    std::nullopt,
                    outcome.iterations,
                    outcome.best_norm,
                    outcome.best_norm <= options.tol_residual,
                    std::move(outcome.step_norms),
                    std::move(outcome.residual_norms),
                    std::nullopt};
  return solution;
}

Solution solve_isoperimetric(const VariationalProblem& problem,
                             const IsoperimetricConstraint& constraint,
                             std::size_t n, const SolverOptions& options) {
  if (n < 2) throw InvalidArgument("solve requires n >= 2");
  validate(options, n - 1);
  const Mesh mesh(problem.a, problem.b, n);
  const GLWeights weights(problem.alpha, n);

  // Unknowns: interior trajectory followed by the multiplier.
  const ResidualFn residual = [&](std::span<const double> u) {
    const double lambda = u.back();
    const std::span<const double> interior = u.first(u.size() - 1);
    const VariationalProblem augmented{
        augmented_integrand(problem.lagrangian, constraint.integrand, lambda),
        problem.alpha, problem.a,  problem.b,
        problem.x_a,   problem.x_b};
    std::vector<double> r = assemble_residual(augmented, mesh, weights, interior);
    const std::vector<double> samples = with_boundaries(problem, interior);
    r.push_back(assemble_constraint_residual(constraint, problem.alpha, mesh, samples));
    return r;
  };
  const JacobianFn jacobian = [&](std::span<const double> u) {
    return fd_jacobian(residual, u, residual(u));
  };

  std::vector<double> start =
      options.initial_guess ? *options.initial_guess : linear_interpolation(problem, n);
  start.push_back(0.0);  // multiplier
  NewtonOutcome outcome = newton_iterate(residual, jacobian, std::move(start), options);

  const std::span<const double> interior =
      std::span<const double>(outcome.best).first(outcome.best.size() - 1);
  Solution solution{mesh,
                    with_boundaries(problem, interior),
                    outcome.best.back(),
                    outcome.iterations,
                    outcome.best_norm,
                    outcome.best_norm <= options.tol_residual,
                    std::move(outcome.step_norms),
                    std::move(outcome.residual_norms),
                    std::nullopt};
  solution.constraint_residual =
      assemble_constraint_residual(constraint, problem.alpha, mesh, solution.values);
  return solution;
}

}  // namespace fracvar
