#include "fracvar/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>

#include "fracvar/errors.hpp"

namespace fracvar {

std::string format_shortest(double v) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

double error_max(const Solution& solution, const ExactSolution& exact) {
  double worst = 0.0;
  for (std::size_t i = 0; i < solution.values.size(); ++i) {
    worst = std::max(worst, std::fabs(exact.value(solution.mesh.point(i)) - solution.values[i]));
  }
  return worst;
}

void write_solution_csv(std::ostream& out, const Solution& solution,
                        const ExactSolution* exact) {
  out << "index,t,x_numeric,x_exact,abs_error\n";
  for (std::size_t i = 0; i < solution.values.size(); ++i) {
    const double t = solution.mesh.point(i);
    out << i << ',' << format_shortest(t) << ',' << format_shortest(solution.values[i]) << ',';
    if (exact != nullptr) {
      const double reference = exact->value(t);
      out << format_shortest(reference) << ','
          << format_shortest(std::fabs(reference - solution.values[i]));
    } else {
      out << ',';
    }
    out << '\n';
  }
}

std::vector<StudyRow> convergence_study(const VariationalProblem& problem,
                                        const IsoperimetricConstraint* constraint,
                                        const ExactSolution* exact,
                                        std::span<const std::size_t> n_list,
                                        const SolverOptions& options) {
  if (n_list.empty()) throw InvalidArgument("convergence study requires at least one mesh size");

  std::vector<StudyRow> rows;
  rows.reserve(n_list.size());
  for (const std::size_t n : n_list) {
    StudyRow row;
    row.n = n;
    const auto started = std::chrono::steady_clock::now();
    try {
      const Solution solution = constraint != nullptr
                                    ? solve_isoperimetric(problem, *constraint, n, options)
                                    : solve(problem, n, options);
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      row.converged = solution.converged;
      row.iterations = solution.iterations;
      row.residual_norm = solution.final_residual_norm;
      row.lambda = solution.lambda;
      if (exact != nullptr) {
        row.error = error_max(solution, *exact);
        // Observed order against the previous successful row.
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
          if (it->error && *it->error > 0.0 && *row.error > 0.0 && it->n != n) {
            row.order = std::log(*it->error / *row.error) /
                        std::log(static_cast<double>(n) / static_cast<double>(it->n));
            break;
          }
        }
      }
    } catch (const Error& e) {
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      row.failure = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_study_csv(std::ostream& out, std::span<const StudyRow> rows) {
  out << "n,converged,iterations,residual_norm,error,order,lambda,seconds\n";
  for (const StudyRow& row : rows) {
    out << row.n << ',' << (row.converged ? 1 : 0) << ',' << row.iterations << ','
        << format_shortest(row.residual_norm) << ',';
    if (row.error) out << format_shortest(*row.error);
    out << ',';
    if (row.order) out << format_shortest(*row.order);
    out << ',';
    if (row.lambda) out << format_shortest(*row.lambda);
    out << ',' << format_shortest(row.seconds) << '\n';
  }
}

}  // namespace fracvar
