/**
 * @file expr.cpp
 * @brief Recursive-descent parser and evaluators for the expression grammar.
 */
#include "lubbock/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace lubbock {

namespace {

enum class Fn { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Tanh, Abs };

const std::pair<const char*, Fn> kFunctions[] = {
    {"sin", Fn::Sin},   {"cos", Fn::Cos},   {"tan", Fn::Tan},  {"exp", Fn::Exp},
    {"log", Fn::Log},   {"sqrt", Fn::Sqrt}, {"sinh", Fn::Sinh}, {"cosh", Fn::Cosh},
    {"tanh", Fn::Tanh}, {"abs", Fn::Abs},
};

}  // namespace

struct Expr::Node {
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Func };
  Kind kind;
  Rational number;
  Fn fn = Fn::Abs;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

std::shared_ptr<Expr::Node> make_node(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) throw ExprError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr left = parse_term();
    for (;;) {
      if (eat('+')) {
        left = make_node(Kind::Add, left, parse_term());
      } else if (eat('-')) {
        left = make_node(Kind::Sub, left, parse_term());
      } else {
        return left;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr left = parse_unary();
    for (;;) {
      if (eat('*')) {
        left = make_node(Kind::Mul, left, parse_unary());
      } else if (eat('/')) {
        left = make_node(Kind::Div, left, parse_unary());
      } else {
        return left;
      }
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) return make_node(Kind::Negate, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (eat('^')) return make_node(Kind::Pow, base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ExprError(pos_, "expected number, 'x', function, or '('");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_expr();
      if (!eat(')')) throw ExprError(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    throw ExprError(pos_, "expected number, 'x', function, or '('");
  }

  NodePtr parse_number() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      ++pos_;
    // Exponent suffix only when followed by a digit (or signed digit).
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      size_t mark = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      } else {
        pos_ = mark;
      }
    }
    auto parsed = Rational::parse(s_.substr(start, pos_ - start));
    if (!parsed) throw ExprError(start, "malformed number literal");
    auto n = make_node(Kind::Number);
    n->number = *parsed;
    return n;
  }

  NodePtr parse_name() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "x") return make_node(Kind::Variable);
    for (const auto& [fname, fn] : kFunctions) {
      if (name == fname) {
        if (!eat('(')) throw ExprError(pos_, "expected '(' after function name");
        NodePtr arg = parse_expr();
        if (!eat(')')) throw ExprError(pos_, "expected ')'");
        auto n = make_node(Kind::Func, arg);
        n->fn = fn;
        return n;
      }
    }
    throw ExprError(start, "unknown name '" + name + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

double eval_node(const Expr::Node& n, double x) {
  switch (n.kind) {
    case Kind::Number: return n.number.to_double();
    case Kind::Variable: return x;
    case Kind::Negate: return -eval_node(*n.a, x);
    case Kind::Add: return eval_node(*n.a, x) + eval_node(*n.b, x);
    case Kind::Sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
    case Kind::Mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
    case Kind::Div: return eval_node(*n.a, x) / eval_node(*n.b, x);
    case Kind::Pow: return std::pow(eval_node(*n.a, x), eval_node(*n.b, x));
    case Kind::Func: {
      double v = eval_node(*n.a, x);
      switch (n.fn) {
        case Fn::Sin: return std::sin(v);
        case Fn::Cos: return std::cos(v);
        case Fn::Tan: return std::tan(v);
        case Fn::Exp: return std::exp(v);
        case Fn::Log: return std::log(v);
        case Fn::Sqrt: return std::sqrt(v);
        case Fn::Sinh: return std::sinh(v);
        case Fn::Cosh: return std::cosh(v);
        case Fn::Tanh: return std::tanh(v);
        case Fn::Abs: return std::fabs(v);
      }
      return 0.0;
    }
  }
  return 0.0;
}

Rational eval_exact_node(const Expr::Node& n, const Rational& x) {
  switch (n.kind) {
    case Kind::Number: return n.number;
    case Kind::Variable: return x;
    case Kind::Negate: return -eval_exact_node(*n.a, x);
    case Kind::Add: return eval_exact_node(*n.a, x) + eval_exact_node(*n.b, x);
    case Kind::Sub: return eval_exact_node(*n.a, x) - eval_exact_node(*n.b, x);
    case Kind::Mul: return eval_exact_node(*n.a, x) * eval_exact_node(*n.b, x);
    case Kind::Div: return eval_exact_node(*n.a, x) / eval_exact_node(*n.b, x);
    case Kind::Pow: {
      Rational base = eval_exact_node(*n.a, x);
      Rational e = eval_exact_node(*n.b, x);
      if (!e.is_integer()) throw ExactEvalError("exact mode requires integer exponents");
      if (!e.numerator().fits_slong_p()) throw ExactEvalError("exponent out of range");
      return base.pow(e.numerator().get_si());
    }
    case Kind::Func:
      if (n.fn == Fn::Abs) return eval_exact_node(*n.a, x).abs();
      throw ExactEvalError("exact mode supports rational-closed expressions only");
  }
  throw ExactEvalError("malformed expression tree");
}

bool rational_closed_node(const Expr::Node& n) {
  switch (n.kind) {
    case Kind::Number:
    case Kind::Variable:
      return true;
    case Kind::Negate:
      return rational_closed_node(*n.a);
    case Kind::Func:
      return n.fn == Fn::Abs && rational_closed_node(*n.a);
    default:
      return rational_closed_node(*n.a) && rational_closed_node(*n.b);
  }
}

std::string print_node(const Expr::Node& n) {
  switch (n.kind) {
    case Kind::Number: return n.number.to_string();
    case Kind::Variable: return "x";
    case Kind::Negate: return "(-" + print_node(*n.a) + ")";
    case Kind::Add: return "(" + print_node(*n.a) + " + " + print_node(*n.b) + ")";
    case Kind::Sub: return "(" + print_node(*n.a) + " - " + print_node(*n.b) + ")";
    case Kind::Mul: return "(" + print_node(*n.a) + " * " + print_node(*n.b) + ")";
    case Kind::Div: return "(" + print_node(*n.a) + " / " + print_node(*n.b) + ")";
    case Kind::Pow: return "(" + print_node(*n.a) + " ^ " + print_node(*n.b) + ")";
    case Kind::Func: {
      for (const auto& [fname, fn] : kFunctions)
        if (fn == n.fn) return std::string(fname) + "(" + print_node(*n.a) + ")";
      return "?";
    }
  }
  return "?";
}

}  // namespace

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.root_ = Parser(text).run();
  return e;
}

double Expr::eval(double x) const { return eval_node(*root_, x); }

Rational Expr::eval_exact(const Rational& x) const { return eval_exact_node(*root_, x); }

bool Expr::rational_closed() const { return rational_closed_node(*root_); }

std::string Expr::to_string() const { return print_node(*root_); }

}  // namespace lubbock
