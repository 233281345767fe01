#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fracvar/problem.hpp"
#include "fracvar/solver.hpp"

namespace fracvar {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_shortest(double v);

/// Accuracy in the maximum norm: max_i |x_exact(t_i) - x_i| over all
/// mesh points, boundaries included.
double error_max(const Solution& solution, const ExactSolution& exact);

/// Write rows (index, t, x_numeric, x_exact, abs_error) with a header line;
/// the last two columns stay blank when no exact solution is given.
/// Values use the shortest round-trip representation, lines end with LF.
void write_solution_csv(std::ostream& out, const Solution& solution,
                        const ExactSolution* exact);

struct StudyRow {
  std::size_t n = 0;
  bool converged = false;
  int iterations = 0;
  double residual_norm = 0.0;
  double seconds = 0.0;
  std::optional<double> error;    ///< present when an exact solution is known
  std::optional<double> order;    ///< log(E_prev/E) / log(n/n_prev), from the second row on
  std::optional<double> lambda;   ///< present for isoperimetric problems
  std::optional<std::string> failure;  ///< solver error message, if the row failed
};

/// Solve at every mesh size in n_list and tabulate accuracy and cost.
/// A row whose solve throws is reported as failed; the rest of the table is
/// still produced. Rows are ordered by position in n_list.
std::vector<StudyRow> convergence_study(const VariationalProblem& problem,
                                        const IsoperimetricConstraint* constraint,
                                        const ExactSolution* exact,
                                        std::span<const std::size_t> n_list,
                                        const SolverOptions& options = {});

/// CSV form of the study table (header + one line per row).
void write_study_csv(std::ostream& out, std::span<const StudyRow> rows);

}  // namespace fracvar
