#include "mcfsol/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace mcfsol {

namespace {

enum class Op {
  Const, Var,
  Add, Sub, Mul, Div, Pow, Neg,
  Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Asin, Acos, Atan, Abs,
};

}  // namespace

struct Expr::Node {
  Op op = Op::Const;
  double value = 0;
  NodePtr a, b;
};

namespace {

using NodePtr = Expr::NodePtr;
using Node = Expr::Node;

NodePtr make_const(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = v;
  return n;
}

NodePtr make_var() {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  return n;
}

bool is_const(const NodePtr& n, double v) {
  return n->op == Op::Const && n->value == v;
}

NodePtr make(Op op, NodePtr a, NodePtr b = nullptr) {
  // light constant folding and identity pruning keep derivative trees small
  if (a && a->op == Op::Const && (!b || b->op == Op::Const)) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = a;
    n->b = b;
    // evaluate below once the evaluator exists; fill lazily via recursion
    // (cheap: the tree is tiny)
    std::function<double(const NodePtr&)> ev = [&](const NodePtr& m) -> double {
      switch (m->op) {
        case Op::Const: return m->value;
        case Op::Add: return ev(m->a) + ev(m->b);
        case Op::Sub: return ev(m->a) - ev(m->b);
        case Op::Mul: return ev(m->a) * ev(m->b);
        case Op::Div: return ev(m->a) / ev(m->b);
        case Op::Pow: return std::pow(ev(m->a), ev(m->b));
        case Op::Neg: return -ev(m->a);
        case Op::Sin: return std::sin(ev(m->a));
        case Op::Cos: return std::cos(ev(m->a));
        case Op::Tan: return std::tan(ev(m->a));
        case Op::Sinh: return std::sinh(ev(m->a));
        case Op::Cosh: return std::cosh(ev(m->a));
        case Op::Tanh: return std::tanh(ev(m->a));
        case Op::Exp: return std::exp(ev(m->a));
        case Op::Log: return std::log(ev(m->a));
        case Op::Sqrt: return std::sqrt(ev(m->a));
        case Op::Asin: return std::asin(ev(m->a));
        case Op::Acos: return std::acos(ev(m->a));
        case Op::Atan: return std::atan(ev(m->a));
        case Op::Abs: return std::abs(ev(m->a));
        default: return 0;
      }
    };
    return make_const(ev(n));
  }
  if (op == Op::Add) {
    if (is_const(a, 0)) return b;
    if (is_const(b, 0)) return a;
  }
  if (op == Op::Sub && is_const(b, 0)) return a;
  if (op == Op::Mul) {
    if (is_const(a, 0) || is_const(b, 0)) return make_const(0);
    if (is_const(a, 1)) return b;
    if (is_const(b, 1)) return a;
  }
  if (op == Op::Div && is_const(a, 0)) return make_const(0);
  if (op == Op::Div && is_const(b, 1)) return a;
  if (op == Op::Pow && is_const(b, 1)) return a;
  if (op == Op::Pow && is_const(b, 0)) return make_const(1);

  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(const std::string& text, std::string var)
      : text_(text), var_(std::move(var)) {}

  NodePtr run() {
    NodePtr e = expression();
    skip_ws();
    if (pos_ != text_.size())
      throw ExprParseError("unexpected trailing input at '" + text_.substr(pos_) + "'");
    return e;
  }

 private:
  // expression := term (('+'|'-') term)*
  NodePtr expression() {
    NodePtr e = term();
    for (;;) {
      skip_ws();
      if (consume('+'))
        e = make(Op::Add, e, term());
      else if (consume('-'))
        e = make(Op::Sub, e, term());
      else
        return e;
    }
  }

  // term := factor (('*'|'/') factor)*
  NodePtr term() {
    NodePtr e = factor();
    for (;;) {
      skip_ws();
      if (consume('*'))
        e = make(Op::Mul, e, factor());
      else if (consume('/'))
        e = make(Op::Div, e, factor());
      else
        return e;
    }
  }

  // factor := ('-'|'+') factor | power
  // unary minus binds looser than '^', so -s^2 reads as -(s^2)
  NodePtr factor() {
    skip_ws();
    if (consume('-')) return make(Op::Neg, factor());
    if (consume('+')) return factor();
    return power();
  }

  // power := primary ('^' factor)?   (right associative)
  NodePtr power() {
    NodePtr base = primary();
    skip_ws();
    if (consume('^')) return make(Op::Pow, base, factor());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ExprParseError("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (consume('(')) {
      NodePtr e = expression();
      skip_ws();
      if (!consume(')')) throw ExprParseError("missing ')'");
      return e;
    }
    throw ExprParseError(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    size_t end = pos_;
    while (end < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' ||
            text_[end] == 'e' || text_[end] == 'E' ||
            ((text_[end] == '+' || text_[end] == '-') && end > pos_ &&
             (text_[end - 1] == 'e' || text_[end - 1] == 'E'))))
      ++end;
    const std::string tok = text_.substr(pos_, end - pos_);
    try {
      const double v = std::stod(tok);
      pos_ = end;
      return make_const(v);
    } catch (const std::exception&) {
      throw ExprParseError("bad numeric literal '" + tok + "'");
    }
  }

  NodePtr identifier() {
    size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      ++end;
    const std::string name = text_.substr(pos_, end - pos_);
    pos_ = end;

    static const std::map<std::string, Op> funcs = {
        {"sin", Op::Sin},   {"cos", Op::Cos},   {"tan", Op::Tan},
        {"sinh", Op::Sinh}, {"cosh", Op::Cosh}, {"tanh", Op::Tanh},
        {"exp", Op::Exp},   {"log", Op::Log},   {"sqrt", Op::Sqrt},
        {"asin", Op::Asin}, {"acos", Op::Acos}, {"atan", Op::Atan},
        {"abs", Op::Abs}};

    if (const auto it = funcs.find(name); it != funcs.end()) {
      skip_ws();
      if (!consume('(')) throw ExprParseError("expected '(' after " + name);
      NodePtr arg = expression();
      skip_ws();
      if (!consume(')')) throw ExprParseError("missing ')' after " + name + "(...");
      return make(it->second, arg);
    }
    if (name == var_) return make_var();
    if (name == "pi") return make_const(M_PI);
    if (name == "e") return make_const(M_E);
    throw ExprParseError("unknown identifier '" + name + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  std::string var_;
  size_t pos_ = 0;
};

double eval_node(const NodePtr& n, double s) {
  switch (n->op) {
    case Op::Const: return n->value;
    case Op::Var: return s;
    case Op::Add: return eval_node(n->a, s) + eval_node(n->b, s);
    case Op::Sub: return eval_node(n->a, s) - eval_node(n->b, s);
    case Op::Mul: return eval_node(n->a, s) * eval_node(n->b, s);
    case Op::Div: return eval_node(n->a, s) / eval_node(n->b, s);
    case Op::Pow: return std::pow(eval_node(n->a, s), eval_node(n->b, s));
    case Op::Neg: return -eval_node(n->a, s);
    case Op::Sin: return std::sin(eval_node(n->a, s));
    case Op::Cos: return std::cos(eval_node(n->a, s));
    case Op::Tan: return std::tan(eval_node(n->a, s));
    case Op::Sinh: return std::sinh(eval_node(n->a, s));
    case Op::Cosh: return std::cosh(eval_node(n->a, s));
    case Op::Tanh: return std::tanh(eval_node(n->a, s));
    case Op::Exp: return std::exp(eval_node(n->a, s));
    case Op::Log: return std::log(eval_node(n->a, s));
    case Op::Sqrt: return std::sqrt(eval_node(n->a, s));
    case Op::Asin: return std::asin(eval_node(n->a, s));
    case Op::Acos: return std::acos(eval_node(n->a, s));
    case Op::Atan: return std::atan(eval_node(n->a, s));
    case Op::Abs: return std::abs(eval_node(n->a, s));
  }
  return 0;
}

NodePtr derive(const NodePtr& n) {
  switch (n->op) {
    case Op::Const: return make_const(0);
    case Op::Var: return make_const(1);
    case Op::Add: return make(Op::Add, derive(n->a), derive(n->b));
    case Op::Sub: return make(Op::Sub, derive(n->a), derive(n->b));
    case Op::Mul:
      return make(Op::Add, make(Op::Mul, derive(n->a), n->b),
                  make(Op::Mul, n->a, derive(n->b)));
    case Op::Div:
      return make(Op::Div,
                  make(Op::Sub, make(Op::Mul, derive(n->a), n->b),
                       make(Op::Mul, n->a, derive(n->b))),
                  make(Op::Mul, n->b, n->b));
    case Op::Pow: {
      if (n->b->op == Op::Const) {
        // d(f^c) = c f^{c-1} f'
        const double c = n->b->value;
        return make(Op::Mul, make_const(c),
                    make(Op::Mul, make(Op::Pow, n->a, make_const(c - 1)),
                         derive(n->a)));
      }
      // d(f^g) = f^g (g' log f + g f'/f)
      NodePtr fg = make(Op::Pow, n->a, n->b);
      NodePtr t1 = make(Op::Mul, derive(n->b), make(Op::Log, n->a));
      NodePtr t2 = make(Op::Div, make(Op::Mul, n->b, derive(n->a)), n->a);
      return make(Op::Mul, fg, make(Op::Add, t1, t2));
    }
    case Op::Neg: return make(Op::Neg, derive(n->a));
    case Op::Sin: return make(Op::Mul, make(Op::Cos, n->a), derive(n->a));
    case Op::Cos:
      return make(Op::Neg, make(Op::Mul, make(Op::Sin, n->a), derive(n->a)));
    case Op::Tan: {
      NodePtr sec2 = make(Op::Div, make_const(1),
                          make(Op::Mul, make(Op::Cos, n->a), make(Op::Cos, n->a)));
      return make(Op::Mul, sec2, derive(n->a));
    }
    case Op::Sinh: return make(Op::Mul, make(Op::Cosh, n->a), derive(n->a));
    case Op::Cosh: return make(Op::Mul, make(Op::Sinh, n->a), derive(n->a));
    case Op::Tanh: {
      NodePtr sech2 = make(Op::Div, make_const(1),
                           make(Op::Mul, make(Op::Cosh, n->a), make(Op::Cosh, n->a)));
      return make(Op::Mul, sech2, derive(n->a));
    }
    case Op::Exp: return make(Op::Mul, make(Op::Exp, n->a), derive(n->a));
    case Op::Log: return make(Op::Div, derive(n->a), n->a);
    case Op::Sqrt:
      return make(Op::Div, derive(n->a),
                  make(Op::Mul, make_const(2), make(Op::Sqrt, n->a)));
    case Op::Asin:
      return make(Op::Div, derive(n->a),
                  make(Op::Sqrt, make(Op::Sub, make_const(1),
                                      make(Op::Mul, n->a, n->a))));
    case Op::Acos:
      return make(Op::Neg,
                  make(Op::Div, derive(n->a),
                       make(Op::Sqrt, make(Op::Sub, make_const(1),
                                           make(Op::Mul, n->a, n->a)))));
    case Op::Atan:
      return make(Op::Div, derive(n->a),
                  make(Op::Add, make_const(1), make(Op::Mul, n->a, n->a)));
    case Op::Abs:
      // derivative of |f| away from zeros: sign(f) f' = f f'/|f|
      return make(Op::Div, make(Op::Mul, n->a, derive(n->a)), make(Op::Abs, n->a));
  }
  return make_const(0);
}

std::string node_to_string(const NodePtr& n) {
  std::ostringstream os;
  auto bin = [&](const char* sym) {
    os << "(" << node_to_string(n->a) << sym << node_to_string(n->b) << ")";
  };
  auto fn = [&](const char* name) { os << name << "(" << node_to_string(n->a) << ")"; };
  switch (n->op) {
    case Op::Const: os << n->value; break;
    case Op::Var: os << "s"; break;
    case Op::Add: bin("+"); break;
    case Op::Sub: bin("-"); break;
    case Op::Mul: bin("*"); break;
    case Op::Div: bin("/"); break;
    case Op::Pow: bin("^"); break;
    case Op::Neg: os << "(-" << node_to_string(n->a) << ")"; break;
    case Op::Sin: fn("sin"); break;
    case Op::Cos: fn("cos"); break;
    case Op::Tan: fn("tan"); break;
    case Op::Sinh: fn("sinh"); break;
    case Op::Cosh: fn("cosh"); break;
    case Op::Tanh: fn("tanh"); break;
    case Op::Exp: fn("exp"); break;
    case Op::Log: fn("log"); break;
    case Op::Sqrt: fn("sqrt"); break;
    case Op::Asin: fn("asin"); break;
    case Op::Acos: fn("acos"); break;
    case Op::Atan: fn("atan"); break;
    case Op::Abs: fn("abs"); break;
  }
  return os.str();
}

}  // namespace

Expr Expr::parse(const std::string& text, const std::string& var) {
  return Expr(Parser(text, var).run());
}

double Expr::eval(double s) const { return eval_node(root_, s); }

Expr Expr::derivative() const { return Expr(derive(root_)); }

std::string Expr::to_string() const { return node_to_string(root_); }

ScalarCurve Expr::as_curve() const {
  const NodePtr f = root_;
  const NodePtr d1 = derive(root_);
  const NodePtr d2 = derive(d1);
  return ScalarCurve([f](double s) { return eval_node(f, s); },
                     [d1](double s) { return eval_node(d1, s); },
                     [d2](double s) { return eval_node(d2, s); });
}

}  // namespace mcfsol
