#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "fracvar/problem.hpp"

namespace fracvar {

enum class UnaryFn { Negate, Sqrt, Abs, Sin, Cos, Exp, Ln, Gamma };
enum class BinaryOp { Add, Subtract, Multiply, Divide, Power };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over the variables t, x and d, where d stands
/// for the fractional-derivative slot of an integrand L(t, x, D^alpha x).
class Expr {
 public:
  struct Literal {
    double value;
  };
  struct Variable {
    char name;  // 't', 'x' or 'd'
  };
  struct Unary {
    UnaryFn fn;
    ExprPtr operand;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  using Node = std::variant<Literal, Variable, Unary, Binary>;

  explicit Expr(Node node) : node_(std::move(node)) {}
  const Node& node() const noexcept { return node_; }

 private:
  Node node_;
};

/// Recursive-descent parse of the expression grammar (see docs/grammar.md):
/// ^ binds tightest and to the right, then unary minus, then * /, then + -.
/// Functions: gamma, pow, sqrt, abs, sin, cos, exp, ln. No implicit
/// multiplication. Throws ParseError with the byte offset of the defect.
ExprPtr parse(std::string_view source);

/// Evaluate at a point. Domain violations (division by zero, ln of a
/// non-positive value, gamma poles, fractional powers of negative bases) and
/// overflow to non-finite values throw EvaluationError naming the offending
/// subexpression.
double evaluate(const Expr& e, double t, double x, double d);

/// Render with minimal parentheses; parsing the result reproduces the tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// Problem whose Lagrangian evaluates the parsed source and whose partials
/// come from central finite differences.
VariationalProblem to_problem(std::string_view lagrangian_source,
                              FractionalOrder alpha, double a, double b,
                              double x_a, double x_b);

/// Integral constraint with a parsed integrand and finite-difference partials.
IsoperimetricConstraint to_constraint(std::string_view integrand_source,
                                      double target);

}  // namespace fracvar
