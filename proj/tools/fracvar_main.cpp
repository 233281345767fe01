// Command-line front end: solve built-in examples or user-supplied
// Lagrangians, emit CSV solution data, and run convergence studies.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracvar/builtin_problems.hpp"
#include "fracvar/errors.hpp"
#include "fracvar/expression.hpp"
#include "fracvar/report.hpp"
#include "fracvar/solver.hpp"

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct ProblemSetup {
  std::string descriptor;
  fracvar::VariationalProblem problem;
  std::optional<fracvar::IsoperimetricConstraint> constraint;
  std::optional<fracvar::ExactSolution> exact;
};

struct CommonFlags {
  int example = 0;  // 0 = not set
  std::string lagrangian;
  double alpha = 0.5;
  std::string interval;
  std::string boundary;
  std::string constraint;
  double target = 0.0;
  bool target_set = false;
  double tol = 1e-10;
  int max_iter = 100;
  std::string out_path;
};

void add_problem_flags(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--example", flags.example, "Built-in example id (1, 2 or 3)");
  cmd.add_option("--lagrangian", flags.lagrangian,
                 "Lagrangian L(t, x, d) as an expression, d = fractional derivative of x");
  cmd.add_option("--alpha", flags.alpha, "Fractional order in (0, 1)")->capture_default_str();
  cmd.add_option("--interval", flags.interval, "Domain as A,B");
  cmd.add_option("--boundary", flags.boundary, "Boundary values as XA,XB");
  cmd.add_option("--constraint", flags.constraint,
                 "Isoperimetric integrand g(t, x, d) as an expression");
  auto* target = cmd.add_option("--target", flags.target, "Constraint value K");
  target->each([&flags](const std::string&) { flags.target_set = true; });
  cmd.add_option("--tol", flags.tol, "Residual max-norm tolerance")->capture_default_str();
  cmd.add_option("--max-iter", flags.max_iter, "Newton iteration budget")->capture_default_str();
  cmd.add_option("--out", flags.out_path, "Write CSV here instead of stdout");
}

std::vector<double> parse_number_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw fracvar::InvalidArgument(std::string(flag) + ": expected comma-separated numbers, got '" +
                                     text + "'");
    }
    pos = comma + 1;
  }
  return values;
}

ProblemSetup build_setup(const CommonFlags& flags) {
  const bool has_expression = !flags.lagrangian.empty();
  if ((flags.example != 0) == has_expression) {
    throw fracvar::InvalidArgument("give exactly one of --example or --lagrangian");
  }

  if (flags.example != 0) {
    fracvar::ExampleProblem example = fracvar::builtin_example(flags.example);
    return {example.name, std::move(example.problem), std::move(example.constraint),
            std::move(example.exact)};
  }

  if (flags.interval.empty() || flags.boundary.empty()) {
    throw fracvar::InvalidArgument("--lagrangian requires --alpha, --interval and --boundary");
  }
  const std::vector<double> interval = parse_number_list(flags.interval, "--interval");
  const std::vector<double> boundary = parse_number_list(flags.boundary, "--boundary");
  if (interval.size() != 2 || boundary.size() != 2) {
    throw fracvar::InvalidArgument("--interval and --boundary expect exactly two numbers");
  }
  std::optional<fracvar::IsoperimetricConstraint> constraint;
  if (!flags.constraint.empty() || flags.target_set) {
    if (flags.constraint.empty() || !flags.target_set) {
      throw fracvar::InvalidArgument("--constraint and --target must be given together");
    }
    constraint = fracvar::to_constraint(flags.constraint, flags.target);
  }
  return {flags.lagrangian,
          fracvar::to_problem(flags.lagrangian, fracvar::FractionalOrder(flags.alpha), interval[0],
                              interval[1], boundary[0], boundary[1]),
          std::move(constraint), std::nullopt};
}

void print_report(std::ostream& out, const ProblemSetup& setup, const fracvar::Solution& solution,
                  double seconds) {
  using fracvar::format_shortest;
  out << "problem:    " << setup.descriptor << '\n'
      << "n:          " << solution.mesh.n()
      << "   alpha: " << format_shortest(setup.problem.alpha.value()) << "   interval: ["
      << format_shortest(setup.problem.a) << ", " << format_shortest(setup.problem.b)
      << "]   boundary: " << format_shortest(setup.problem.x_a) << ", "
      << format_shortest(setup.problem.x_b) << '\n';
  out << "converged:  " << (solution.converged ? "yes" : "NO")
      << "   iterations: " << solution.iterations
      << "   residual: " << format_shortest(solution.final_residual_norm) << '\n';
  if (solution.lambda) {
    out << "lambda:     " << format_shortest(*solution.lambda);
    if (solution.constraint_residual) {
      out << "   constraint residual: " << format_shortest(*solution.constraint_residual);
    }
    out << '\n';
  }
  if (setup.exact) {
    out << "error E:    " << format_shortest(fracvar::error_max(solution, *setup.exact)) << '\n';
  }
  out << "time:       " << format_shortest(seconds * 1e3) << " ms\n";
}

int run_solve(const CommonFlags& flags, std::size_t n) {
  const ProblemSetup setup = build_setup(flags);
  fracvar::SolverOptions options;
  options.tol_residual = flags.tol;
  options.max_iterations = flags.max_iter;

  const auto started = std::chrono::steady_clock::now();
  const fracvar::Solution solution =
      setup.constraint ? fracvar::solve_isoperimetric(setup.problem, *setup.constraint, n, options)
                       : fracvar::solve(setup.problem, n, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const fracvar::ExactSolution* exact = setup.exact ? &*setup.exact : nullptr;
  if (flags.out_path.empty()) {
    // CSV on stdout, human-readable report on stderr.
    fracvar::write_solution_csv(std::cout, solution, exact);
    print_report(std::cerr, setup, solution, seconds);
  } else {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) throw fracvar::InvalidArgument("cannot open output file '" + flags.out_path + "'");
    fracvar::write_solution_csv(file, solution, exact);
    print_report(std::cout, setup, solution, seconds);
  }
  return solution.converged ? kExitConverged : kExitNumerical;
}

int run_study(const CommonFlags& flags, const std::string& n_list_text) {
  const ProblemSetup setup = build_setup(flags);
  std::vector<std::size_t> ns;
  for (const double v : parse_number_list(n_list_text, "--n-list")) {
    if (v < 2 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw fracvar::InvalidArgument("--n-list entries must be integers >= 2");
    }
    ns.push_back(static_cast<std::size_t>(v));
  }

  fracvar::SolverOptions options;
  options.tol_residual = flags.tol;
  options.max_iterations = flags.max_iter;
  const std::vector<fracvar::StudyRow> rows = fracvar::convergence_study(
      setup.problem, setup.constraint ? &*setup.constraint : nullptr,
      setup.exact ? &*setup.exact : nullptr, ns, options);

  const auto sci = [](std::optional<double> v) {
    if (!v) return std::string("-");
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3e", *v);
    return std::string(buffer);
  };
  const auto fix = [](std::optional<double> v, const char* spec) {
    if (!v) return std::string("-");
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), spec, *v);
    return std::string(buffer);
  };

  std::cout << "problem: " << setup.descriptor << '\n';
  std::cout << std::left << std::setw(8) << "n" << std::setw(6) << "conv" << std::setw(6) << "iter"
            << std::setw(13) << "residual" << std::setw(13) << "E" << std::setw(8) << "order"
            << std::setw(14) << "lambda" << "seconds\n";
  bool all_converged = true;
  for (const fracvar::StudyRow& row : rows) {
    std::cout << std::left << std::setw(8) << row.n;
    if (row.failure) {
      all_converged = false;
      std::cout << "failed: " << *row.failure << '\n';
      continue;
    }
    all_converged = all_converged && row.converged;
    std::cout << std::setw(6) << (row.converged ? "yes" : "NO") << std::setw(6) << row.iterations
              << std::setw(13) << sci(row.residual_norm) << std::setw(13) << sci(row.error)
              << std::setw(8) << fix(row.order, "%.2f") << std::setw(14)
              << fix(row.lambda, "%.8g") << sci(row.seconds) << '\n';
  }
  if (!flags.out_path.empty()) {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) throw fracvar::InvalidArgument("cannot open output file '" + flags.out_path + "'");
    fracvar::write_study_csv(file, rows);
  }
  return all_converged ? kExitConverged : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct solver for fractional variational problems"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::size_t n = 100;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one problem and emit its CSV solution");
  add_problem_flags(*solve_cmd, solve_flags);
  solve_cmd->add_option("--n", n, "Number of mesh subintervals")->capture_default_str();

  CommonFlags study_flags;
  std::string n_list = "10,20,40,80";
  CLI::App* study_cmd =
      app.add_subcommand("study", "Solve at several mesh sizes and tabulate the error decay");
  add_problem_flags(*study_cmd, study_flags);
  study_cmd->add_option("--n-list", n_list, "Comma-separated mesh sizes")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) return run_solve(solve_flags, n);
    return run_study(study_flags, n_list);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;  // keep --help at 0, every parse failure at 1
  } catch (const fracvar::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fracvar::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fracvar::Error& e) {
    // Numerical failures: singular Jacobian, evaluation leaving its domain.
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
