#include "fracvar/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "fracvar/errors.hpp"
#include "fracvar/gamma_function.hpp"

namespace fracvar {
namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind {
  Number,
  Identifier,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  End,
};

struct Token {
  TokenKind kind;
  std::size_t offset;
  double number = 0.0;
  std::string_view text{};
};

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) {}

  Token next() {
    while (pos_ < source_.size() && is_space(source_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= source_.size()) return {TokenKind::End, start};

    const char c = source_[pos_];
    switch (c) {
      case '+': ++pos_; return {TokenKind::Plus, start};
      case '-': ++pos_; return {TokenKind::Minus, start};
      case '*': ++pos_; return {TokenKind::Star, start};
      case '/': ++pos_; return {TokenKind::Slash, start};
      case '^': ++pos_; return {TokenKind::Caret, start};
      case '(': ++pos_; return {TokenKind::LParen, start};
      case ')': ++pos_; return {TokenKind::RParen, start};
      case ',': ++pos_; return {TokenKind::Comma, start};
      default: break;
    }
    if (is_digit(c)) return lex_number(start);
    if (is_alpha(c)) {
      while (pos_ < source_.size() && (is_alpha(source_[pos_]) || is_digit(source_[pos_]))) ++pos_;
      return {TokenKind::Identifier, start, 0.0, source_.substr(start, pos_ - start)};
    }
    throw ParseError("syntax error at byte " + std::to_string(start) +
                         ": unexpected character '" + std::string(1, c) + "'",
                     start);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }

  // digits ['.' digits*] [('e'|'E') ['+'|'-'] digits+]
  Token lex_number(std::size_t start) {
    while (pos_ < source_.size() && is_digit(source_[pos_])) ++pos_;
    if (pos_ < source_.size() && source_[pos_] == '.') {
      ++pos_;
      while (pos_ < source_.size() && is_digit(source_[pos_])) ++pos_;
    }
    if (pos_ < source_.size() && (source_[pos_] == 'e' || source_[pos_] == 'E')) {
      std::size_t exp = pos_ + 1;
      if (exp < source_.size() && (source_[exp] == '+' || source_[exp] == '-')) ++exp;
      if (exp < source_.size() && is_digit(source_[exp])) {
        pos_ = exp;
        while (pos_ < source_.size() && is_digit(source_[pos_])) ++pos_;
      }
      // otherwise leave the 'e' for the identifier lexer; it will be
      // rejected as an unknown identifier with its own offset
    }
    const std::string_view text = source_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("syntax error at byte " + std::to_string(start) +
                           ": malformed number '" + std::string(text) + "'",
                       start);
    }
    return {TokenKind::Number, start, value, text};
  }

  std::string_view source_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Parser
//
//   additive       := multiplicative (('+' | '-') multiplicative)*
//   multiplicative := unary (('*' | '/') unary)*
//   unary          := '-' unary | power
//   power          := primary ('^' unary)?
//   primary        := number | variable | function '(' args ')' | '(' additive ')'

class Parser {
 public:
  explicit Parser(std::string_view source) : lexer_(source) { advance(); }

  ExprPtr parse_all() {
    ExprPtr e = additive();
    if (current_.kind != TokenKind::End) {
      fail("expected end of input or an operator");
    }
    return e;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("syntax error at byte " + std::to_string(current_.offset) + ": " + expected,
                     current_.offset);
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (current_.kind == TokenKind::Plus || current_.kind == TokenKind::Minus) {
      const BinaryOp op =
          current_.kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Subtract;
      advance();
      lhs = make(Expr::Binary{op, std::move(lhs), multiplicative()});
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (current_.kind == TokenKind::Star || current_.kind == TokenKind::Slash) {
      const BinaryOp op =
          current_.kind == TokenKind::Star ? BinaryOp::Multiply : BinaryOp::Divide;
      advance();
      lhs = make(Expr::Binary{op, std::move(lhs), unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (current_.kind == TokenKind::Minus) {
      advance();
      return make(Expr::Unary{UnaryFn::Negate, unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (current_.kind == TokenKind::Caret) {
      advance();
      return make(Expr::Binary{BinaryOp::Power, std::move(base), unary()});
    }
    return base;
  }

  ExprPtr primary() {
    switch (current_.kind) {
      case TokenKind::Number: {
        const double value = current_.number;
        advance();
        return make(Expr::Literal{value});
      }
      case TokenKind::Identifier: {
        const Token name = current_;
        advance();
        if (current_.kind == TokenKind::LParen) return call(name);
        if (name.text == "t" || name.text == "x" || name.text == "d") {
          return make(Expr::Variable{name.text.front()});
        }
        throw ParseError("unknown identifier '" + std::string(name.text) + "' at byte " +
                             std::to_string(name.offset) + " (variables are t, x, d)",
                         name.offset);
      }
      case TokenKind::LParen: {
        advance();
        ExprPtr inner = additive();
        expect(TokenKind::RParen, "expected ')'");
        return inner;
      }
      default:
        fail("expected a number, a variable, a function call or '('");
    }
  }

  ExprPtr call(const Token& name) {
    expect(TokenKind::LParen, "expected '('");
    std::vector<ExprPtr> args;
    args.push_back(additive());
    while (current_.kind == TokenKind::Comma) {
      advance();
      args.push_back(additive());
    }
    expect(TokenKind::RParen, "expected ')' or ','");

    if (name.text == "pow") {
      if (args.size() != 2) {
        throw ParseError("pow expects 2 arguments at byte " + std::to_string(name.offset),
                         name.offset);
      }
      return make(Expr::Binary{BinaryOp::Power, std::move(args[0]), std::move(args[1])});
    }
    UnaryFn fn;
    if (name.text == "gamma") fn = UnaryFn::Gamma;
    else if (name.text == "sqrt") fn = UnaryFn::Sqrt;
    else if (name.text == "abs") fn = UnaryFn::Abs;
    else if (name.text == "sin") fn = UnaryFn::Sin;
    else if (name.text == "cos") fn = UnaryFn::Cos;
    else if (name.text == "exp") fn = UnaryFn::Exp;
    else if (name.text == "ln") fn = UnaryFn::Ln;
    else {
      throw ParseError("unknown identifier '" + std::string(name.text) + "' at byte " +
                           std::to_string(name.offset),
                       name.offset);
    }
    if (args.size() != 1) {
      throw ParseError(std::string(name.text) + " expects 1 argument at byte " +
                           std::to_string(name.offset),
                       name.offset);
    }
    return make(Expr::Unary{fn, std::move(args[0])});
  }

  void expect(TokenKind kind, const std::string& message) {
    if (current_.kind != kind) fail(message);
    advance();
  }

  static ExprPtr make(Expr::Node node) { return std::make_shared<Expr>(std::move(node)); }

  Lexer lexer_;
  Token current_{TokenKind::End, 0};
};

// ---------------------------------------------------------------------------
// Evaluation

[[noreturn]] void domain_error(const std::string& what, const Expr& at) {
  throw EvaluationError(what + " in '" + to_string(at) + "'");
}

bool is_integer(double v) {
  return v == std::floor(v) && std::fabs(v) <= 9007199254740992.0;  // 2^53
}

// ---------------------------------------------------------------------------
// Printing

// Binding strength of a node as printed: primaries 5, power 4, negation 3,
// products 2, sums 1. Parenthesization below follows the grammar exactly so
// that printing and reparsing reproduces the tree.
int precedence(const Expr& e) {
  struct Visitor {
    int operator()(const Expr::Literal&) const { return 5; }
    int operator()(const Expr::Variable&) const { return 5; }
    int operator()(const Expr::Unary& u) const { return u.fn == UnaryFn::Negate ? 3 : 5; }
    int operator()(const Expr::Binary& b) const {
      switch (b.op) {
        case BinaryOp::Power: return 4;
        case BinaryOp::Multiply:
        case BinaryOp::Divide: return 2;
        default: return 1;
      }
    }
  };
  return std::visit(Visitor{}, e.node());
}

std::string format_literal(double v) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

std::string wrapped(const Expr& e, bool parens) {
  const std::string s = to_string(e);
  return parens ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse(std::string_view source) { return Parser(source).parse_all(); }

double evaluate(const Expr& e, double t, double x, double d) {
  struct Visitor {
    const Expr& self;
    double t, x, d;

    double operator()(const Expr::Literal& lit) const { return lit.value; }

    double operator()(const Expr::Variable& var) const {
      switch (var.name) {
        case 't': return t;
        case 'x': return x;
        default: return d;
      }
    }

    double operator()(const Expr::Unary& u) const {
      const double v = evaluate(*u.operand, t, x, d);
      switch (u.fn) {
        case UnaryFn::Negate: return -v;
        case UnaryFn::Abs: return std::fabs(v);
        case UnaryFn::Sin: return std::sin(v);
        case UnaryFn::Cos: return std::cos(v);
        case UnaryFn::Exp: return check(std::exp(v));
        case UnaryFn::Sqrt:
          if (v < 0.0) domain_error("square root of a negative value", self);
          return std::sqrt(v);
        case UnaryFn::Ln:
          if (v <= 0.0) domain_error("logarithm of a non-positive value", self);
          return std::log(v);
        case UnaryFn::Gamma: {
          double g = 0.0;
          try {
            g = gamma_function(v);
          } catch (const Error&) {
            domain_error("gamma evaluated at a pole", self);
          }
          return check(g);
        }
      }
      return 0.0;  // unreachable
    }

    double operator()(const Expr::Binary& b) const {
      const double l = evaluate(*b.lhs, t, x, d);
      const double r = evaluate(*b.rhs, t, x, d);
      switch (b.op) {
        case BinaryOp::Add: return check(l + r);
        case BinaryOp::Subtract: return check(l - r);
        case BinaryOp::Multiply: return check(l * r);
        case BinaryOp::Divide:
          if (r == 0.0) domain_error("division by zero", self);
          return check(l / r);
        case BinaryOp::Power:
          if (l < 0.0 && !is_integer(r)) {
            domain_error("non-integer power of a negative base", self);
          }
          if (l == 0.0 && r < 0.0) domain_error("negative power of zero", self);
          return check(std::pow(l, r));
      }
      return 0.0;  // unreachable
    }

    double check(double v) const {
      if (!std::isfinite(v)) domain_error("non-finite result", self);
      return v;
    }
  };
  return std::visit(Visitor{e, t, x, d}, e.node());
}

std::string to_string(const Expr& e) {
  struct Visitor {
    std::string operator()(const Expr::Literal& lit) const { return format_literal(lit.value); }

    std::string operator()(const Expr::Variable& var) const { return std::string(1, var.name); }

    std::string operator()(const Expr::Unary& u) const {
      switch (u.fn) {
        case UnaryFn::Negate:
          return "-" + wrapped(*u.operand, precedence(*u.operand) <= 2);
        case UnaryFn::Sqrt: return "sqrt(" + to_string(*u.operand) + ")";
        case UnaryFn::Abs: return "abs(" + to_string(*u.operand) + ")";
        case UnaryFn::Sin: return "sin(" + to_string(*u.operand) + ")";
        case UnaryFn::Cos: return "cos(" + to_string(*u.operand) + ")";
        case UnaryFn::Exp: return "exp(" + to_string(*u.operand) + ")";
        case UnaryFn::Ln: return "ln(" + to_string(*u.operand) + ")";
        case UnaryFn::Gamma: return "gamma(" + to_string(*u.operand) + ")";
      }
      return {};  // unreachable
    }

    std::string operator()(const Expr::Binary& b) const {
      if (b.op == BinaryOp::Power) {
        // Right-associative; the exponent slot admits a bare unary minus.
        return wrapped(*b.lhs, precedence(*b.lhs) <= 4) + "^" +
               wrapped(*b.rhs, precedence(*b.rhs) < 3);
      }
      const int prec = precedence_of(b.op);
      const char* op = b.op == BinaryOp::Add        ? " + "
                       : b.op == BinaryOp::Subtract ? " - "
                       : b.op == BinaryOp::Multiply ? " * "
                                                    : " / ";
      return wrapped(*b.lhs, precedence(*b.lhs) < prec) + op +
             wrapped(*b.rhs, precedence(*b.rhs) <= prec);
    }

    static int precedence_of(BinaryOp op) {
      return (op == BinaryOp::Multiply || op == BinaryOp::Divide) ? 2 : 1;
    }
  };
  return std::visit(Visitor{}, e.node());
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  struct Visitor {
    const Expr& other;

    bool operator()(const Expr::Literal& lit) const {
      return lit.value == std::get<Expr::Literal>(other.node()).value;
    }
    bool operator()(const Expr::Variable& var) const {
      return var.name == std::get<Expr::Variable>(other.node()).name;
    }
    bool operator()(const Expr::Unary& u) const {
      const auto& o = std::get<Expr::Unary>(other.node());
      return u.fn == o.fn && structurally_equal(*u.operand, *o.operand);
    }
    bool operator()(const Expr::Binary& bin) const {
      const auto& o = std::get<Expr::Binary>(other.node());
      return bin.op == o.op && structurally_equal(*bin.lhs, *o.lhs) &&
             structurally_equal(*bin.rhs, *o.rhs);
    }
  };
  return std::visit(Visitor{b}, a.node());
}

VariationalProblem to_problem(std::string_view lagrangian_source,
                              FractionalOrder alpha, double a, double b,
                              double x_a, double x_b) {
  if (!(b > a)) throw InvalidArgument("to_problem requires b > a");
  const ExprPtr tree = parse(lagrangian_source);
  PointFn value = [tree](double t, double x, double d) { return evaluate(*tree, t, x, d); };
  return {with_finite_difference_partials(std::move(value)), alpha, a, b, x_a, x_b};
}

IsoperimetricConstraint to_constraint(std::string_view integrand_source, double target) {
  const ExprPtr tree = parse(integrand_source);
  PointFn value = [tree](double t, double x, double d) { return evaluate(*tree, t, x, d); };
  return {with_finite_difference_partials(std::move(value)), target};
}

}  // namespace fracvar
