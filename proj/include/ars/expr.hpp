#pragma once

#include <memory>
#include <string>

#include "ars/bitvector.hpp"

namespace ars {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Boolean expression over state variables x1..xn and input variables
// u1..um. Kept as provenance next to a compiled truth table.
struct Expr {
  enum class Kind { Const, StateVar, InputVar, Not, And, Or, Xor };

  Kind kind;
  bool value = false;  // Const
  int index = 0;       // StateVar / InputVar, 1-based
  ExprPtr a, b;

  static ExprPtr constant(bool v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Const;
    e->value = v;
    return e;
  }
  static ExprPtr state_var(int i) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::StateVar;
    e->index = i;
    return e;
  }
  static ExprPtr input_var(int j) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::InputVar;
    e->index = j;
    return e;
  }
  static ExprPtr make_not(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Not;
    e->a = std::move(a);
    return e;
  }
  static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }
};

inline bool eval_expr(const Expr& e, const BitVector& state,
                      const BitVector& input) {
  switch (e.kind) {
    case Expr::Kind::Const:
      return e.value;
    case Expr::Kind::StateVar:
      return state.bit(e.index);
    case Expr::Kind::InputVar:
      return input.bit(e.index);
    case Expr::Kind::Not:
      return !eval_expr(*e.a, state, input);
    case Expr::Kind::And:
      return eval_expr(*e.a, state, input) && eval_expr(*e.b, state, input);
    case Expr::Kind::Or:
      return eval_expr(*e.a, state, input) || eval_expr(*e.b, state, input);
    case Expr::Kind::Xor:
      return eval_expr(*e.a, state, input) != eval_expr(*e.b, state, input);
  }
  return false;
}

namespace detail {

// Precedence: ! binds tightest, then &, then ^, then |.
inline int expr_prec(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Or:
      return 1;
    case Expr::Kind::Xor:
      return 2;
    case Expr::Kind::And:
      return 3;
    default:
      return 4;
  }
}

inline void print_expr_rec(const Expr& e, int parent_prec, std::string& out) {
  const int prec = expr_prec(e.kind);
  switch (e.kind) {
    case Expr::Kind::Const:
      out += e.value ? '1' : '0';
      return;
    case Expr::Kind::StateVar:
      out += "x" + std::to_string(e.index);
      return;
    case Expr::Kind::InputVar:
      out += "u" + std::to_string(e.index);
      return;
    case Expr::Kind::Not:
      out += '!';
      print_expr_rec(*e.a, prec, out);
      return;
    default: {
      const bool parens = prec < parent_prec;
      if (parens) out += '(';
      print_expr_rec(*e.a, prec, out);
      out += e.kind == Expr::Kind::And  ? " & "
             : e.kind == Expr::Kind::Or ? " | "
                                        : " ^ ";
      // Right operand needs parens at equal precedence only for mixed
      // chains; these operators are associative, same level is fine.
      print_expr_rec(*e.b, prec, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string print_expr(const Expr& e) {
  std::string out;
  detail::print_expr_rec(e, 0, out);
  return out;
}

}  // namespace ars
