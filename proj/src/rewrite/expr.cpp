#include "rewrite/expr.hpp"

#include "szval/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace rewrite {

ExprPtr variable(std::string name) {
  return std::make_shared<const Expr>(Expr{Variable{std::move(name)}});
}

ExprPtr constant(szval::SzValue value) {
  return std::make_shared<const Expr>(Expr{Constant{value}});
}

ExprPtr negate(ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Negate{std::move(operand)}});
}

ExprPtr sqrt_of(ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Sqrt{std::move(operand)}});
}

ExprPtr sum(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Add{std::move(lhs), std::move(rhs)}});
}

ExprPtr difference(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(
      Expr{Subtract{std::move(lhs), std::move(rhs)}});
}

ExprPtr product(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(
      Expr{Multiply{std::move(lhs), std::move(rhs)}});
}

ExprPtr quotient(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(
      Expr{Divide{std::move(lhs), std::move(rhs)}});
}

szval::SzValue eval_expr(const Expr& e, const Environment& env,
                         szval::RoundingMode rm) {
  using szval::SzValue;
  struct Visitor {
    const Environment& env;
    szval::RoundingMode rm;

    SzValue operator()(const Variable& v) const {
      auto it = env.find(v.name);
      if (it == env.end()) {
        throw std::invalid_argument("unbound variable '" + v.name + "'");
      }
      return it->second;
    }
    SzValue operator()(const Constant& c) const { return c.value; }
    SzValue operator()(const Negate& n) const {
      return szval::neg(eval_expr(*n.operand, env, rm));
    }
    SzValue operator()(const Sqrt& s) const {
      return szval::sqrt(eval_expr(*s.operand, env, rm));
    }
    SzValue operator()(const Add& a) const {
      return szval::add(eval_expr(*a.lhs, env, rm), eval_expr(*a.rhs, env, rm),
                        rm);
    }
    SzValue operator()(const Subtract& s) const {
      return szval::sub(eval_expr(*s.lhs, env, rm), eval_expr(*s.rhs, env, rm),
                        rm);
    }
    SzValue operator()(const Multiply& m) const {
      return szval::mul(eval_expr(*m.lhs, env, rm),
                        eval_expr(*m.rhs, env, rm));
    }
    SzValue operator()(const Divide& d) const {
      return szval::div(eval_expr(*d.lhs, env, rm),
                        eval_expr(*d.rhs, env, rm));
    }
  };
  return std::visit(Visitor{env, rm}, e.node);
}

namespace {

void collect_variables(const Expr& e, std::vector<std::string>& out) {
  struct Visitor {
    std::vector<std::string>& out;

    void operator()(const Variable& v) const {
      if (std::find(out.begin(), out.end(), v.name) == out.end()) {
        out.push_back(v.name);
      }
    }
    void operator()(const Constant&) const {}
    void operator()(const Negate& n) const { collect_variables(*n.operand, out); }
    void operator()(const Sqrt& s) const { collect_variables(*s.operand, out); }
    void operator()(const Add& a) const {
      collect_variables(*a.lhs, out);
      collect_variables(*a.rhs, out);
    }
    void operator()(const Subtract& s) const {
      collect_variables(*s.lhs, out);
      collect_variables(*s.rhs, out);
    }
    void operator()(const Multiply& m) const {
      collect_variables(*m.lhs, out);
      collect_variables(*m.rhs, out);
    }
    void operator()(const Divide& d) const {
      collect_variables(*d.lhs, out);
      collect_variables(*d.rhs, out);
    }
  };
  std::visit(Visitor{out}, e.node);
}

}  // namespace

std::vector<std::string> free_variables(const Expr& e) {
  std::vector<std::string> out;
  collect_variables(e, out);
  return out;
}

std::string to_string(const Expr& e) {
  struct Visitor {
    std::string operator()(const Variable& v) const { return v.name; }
    std::string operator()(const Constant& c) const {
      return szval::to_string(c.value);
    }
    std::string operator()(const Negate& n) const {
      return "-" + wrap(*n.operand);
    }
    std::string operator()(const Sqrt& s) const {
      return "sqrt(" + to_string(*s.operand) + ")";
    }
    std::string operator()(const Add& a) const {
      return wrap(*a.lhs) + " + " + wrap(*a.rhs);
    }
    std::string operator()(const Subtract& s) const {
      return wrap(*s.lhs) + " - " + wrap(*s.rhs);
    }
    std::string operator()(const Multiply& m) const {
      return wrap(*m.lhs) + " * " + wrap(*m.rhs);
    }
    std::string operator()(const Divide& d) const {
      return wrap(*d.lhs) + " / " + wrap(*d.rhs);
    }

    static std::string wrap(const Expr& e) {
      bool atom = std::holds_alternative<Variable>(e.node) ||
                  std::holds_alternative<Constant>(e.node) ||
                  std::holds_alternative<Sqrt>(e.node);
      return atom ? to_string(e) : "(" + to_string(e) + ")";
    }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace rewrite
