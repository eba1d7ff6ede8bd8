#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/errors.hpp"
#include "ars/expr.hpp"

namespace ars {

// A generator function Y: B^n x B^m -> B^n held as an exhaustive truth
// table. The table is the canonical form; expressions, when present, are
// provenance from parsing and must agree with the table. Table index is
// concat(state, input).to_index(): state bits high, input bits low.
class GeneratorFunction {
public:
  static constexpr int kMaxArity = 20;

  GeneratorFunction(int state_width, int input_width,
                    std::vector<BitVector> table,
                    std::vector<ExprPtr> source = {})
      : state_width_(state_width),
        input_width_(input_width),
        table_(std::move(table)),
        source_(std::move(source)) {
    check_arity(state_width_, input_width_);
    if (table_.size() != std::size_t{1} << (state_width_ + input_width_))
      throw Error("truth table has " + std::to_string(table_.size()) +
                  " entries, expected 2^" +
                  std::to_string(state_width_ + input_width_));
    for (const auto& v : table_)
      if (v.width() != state_width_)
        throw WidthMismatch("truth table entry width differs from state width");
    if (!source_.empty() && source_.size() != static_cast<std::size_t>(state_width_))
      throw Error("expected one source expression per state coordinate");
  }

  static GeneratorFunction from_exprs(int state_width, int input_width,
                                      std::vector<ExprPtr> exprs) {
    check_arity(state_width, input_width);
    if (exprs.size() != static_cast<std::size_t>(state_width))
      throw Error("expected one expression per state coordinate");
    const std::size_t cells = std::size_t{1} << (state_width + input_width);
    std::vector<BitVector> table;
    table.reserve(cells);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      const BitVector state(state_width,
                            idx >> input_width);
      const BitVector input(input_width,
                            idx & ((std::uint64_t{1} << input_width) - 1));
      BitVector out = BitVector::zeros(state_width);
      for (int i = 1; i <= state_width; ++i)
        out = out.with_bit(i, eval_expr(*exprs[static_cast<std::size_t>(i - 1)],
                                        state, input));
      table.push_back(out);
    }
    return GeneratorFunction(state_width, input_width, std::move(table),
                             std::move(exprs));
  }

  // Y(mu, nu) = mu for every input.
  static GeneratorFunction identity(int state_width, int input_width) {
    check_arity(state_width, input_width);
    const std::size_t cells = std::size_t{1} << (state_width + input_width);
    std::vector<BitVector> table;
    table.reserve(cells);
    for (std::size_t idx = 0; idx < cells; ++idx)
      table.emplace_back(state_width, idx >> input_width);
    return GeneratorFunction(state_width, input_width, std::move(table));
  }

  int state_width() const { return state_width_; }
  int input_width() const { return input_width_; }
  const std::vector<BitVector>& table() const { return table_; }
  bool has_source() const { return !source_.empty(); }
  const std::vector<ExprPtr>& source() const { return source_; }

  std::size_t table_index(const BitVector& state, const BitVector& input) const {
    return (state.to_index() << input_width_) | input.to_index();
  }

  const BitVector& eval(const BitVector& state, const BitVector& input) const {
    if (state.width() != state_width_)
      throw WidthMismatch("state width " + std::to_string(state.width()) +
                          " differs from expected " +
                          std::to_string(state_width_));
    if (input.width() != input_width_)
      throw WidthMismatch("input width " + std::to_string(input.width()) +
                          " differs from expected " +
                          std::to_string(input_width_));
    return table_[table_index(state, input)];
  }

  // Equality is table-level; source expressions are not compared.
  friend bool operator==(const GeneratorFunction& a, const GeneratorFunction& b) {
    return a.state_width_ == b.state_width_ &&
           a.input_width_ == b.input_width_ && a.table_ == b.table_;
  }

private:
  static void check_arity(int n, int m) {
    if (n < 1 || m < 1)
      throw Error("generator function widths must be positive");
    if (n + m > kMaxArity)
      throw ArityCapExceeded("arity n+m = " + std::to_string(n + m) +
                             " exceeds cap " + std::to_string(kMaxArity));
  }

  int state_width_;
  int input_width_;
  std::vector<BitVector> table_;
  std::vector<ExprPtr> source_;
};

// Y*(mu, nu) = ~Y(~mu, ~nu), complement coordinatewise.
inline GeneratorFunction dual(const GeneratorFunction& f) {
  const int n = f.state_width(), m = f.input_width();
  const std::size_t cells = std::size_t{1} << (n + m);
  std::vector<BitVector> table;
  table.reserve(cells);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    const BitVector state(n, idx >> m);
    const BitVector input(m, idx & ((std::uint64_t{1} << m) - 1));
    table.push_back(~f.eval(~state, ~input));
  }
  return GeneratorFunction(n, m, std::move(table));
}

// (Y x Y')((mu, mu'), (nu, nu')) = (Y(mu, nu), Y'(mu', nu')).
inline GeneratorFunction product(const GeneratorFunction& f,
                                 const GeneratorFunction& g) {
  const int n = f.state_width() + g.state_width();
  const int m = f.input_width() + g.input_width();
  if (n + m > GeneratorFunction::kMaxArity)
    throw ArityCapExceeded("product arity exceeds cap");
  const std::size_t cells = std::size_t{1} << (n + m);
  std::vector<BitVector> table(cells, BitVector::zeros(n));
  for (std::uint64_t sf = 0; sf < (1u << f.state_width()); ++sf)
    for (std::uint64_t sg = 0; sg < (1u << g.state_width()); ++sg)
      for (std::uint64_t inf = 0; inf < (1u << f.input_width()); ++inf)
        for (std::uint64_t ing = 0; ing < (1u << g.input_width()); ++ing) {
          const BitVector mu(f.state_width(), sf), mup(g.state_width(), sg);
          const BitVector nu(f.input_width(), inf), nup(g.input_width(), ing);
          const BitVector state = mu.concat(mup);
          const BitVector input = nu.concat(nup);
          table[(state.to_index() << m) | input.to_index()] =
              f.eval(mu, nu).concat(g.eval(mup, nup));
        }
  return GeneratorFunction(n, m, std::move(table));
}

// (Y || Y1')((mu, mu'), nu) = (Y(mu, nu), Y1'(mu', nu)): shared input.
inline GeneratorFunction parallel(const GeneratorFunction& f,
                                  const GeneratorFunction& g) {
  if (f.input_width() != g.input_width())
    throw InputWidthMismatch("parallel operands must share the input width");
  const int n = f.state_width() + g.state_width();
  const int m = f.input_width();
  if (n + m > GeneratorFunction::kMaxArity)
    throw ArityCapExceeded("parallel arity exceeds cap");
  const std::size_t cells = std::size_t{1} << (n + m);
  std::vector<BitVector> table(cells, BitVector::zeros(n));
  for (std::uint64_t sf = 0; sf < (1u << f.state_width()); ++sf)
    for (std::uint64_t sg = 0; sg < (1u << g.state_width()); ++sg)
      for (std::uint64_t in = 0; in < (1u << m); ++in) {
        const BitVector mu(f.state_width(), sf), mup(g.state_width(), sg);
        const BitVector nu(m, in);
        const BitVector state = mu.concat(mup);
        table[(state.to_index() << m) | nu.to_index()] =
            f.eval(mu, nu).concat(g.eval(mup, nu));
      }
  return GeneratorFunction(n, m, std::move(table));
}

// (theta * Y)((mu, lambda), nu) = (Y(mu, nu), theta(lambda, Y(mu, nu))).
// Note the second stage reads Y(mu, nu), not mu.
inline GeneratorFunction serial_star(const GeneratorFunction& h,
                                     const GeneratorFunction& f) {
  if (h.input_width() != f.state_width())
    throw WidthMismatch(
        "serial_star: second-stage input width must equal first-stage state "
        "width");
  const int n = f.state_width(), p = h.state_width(), m = f.input_width();
  if (n + p + m > GeneratorFunction::kMaxArity)
    throw ArityCapExceeded("serial_star arity exceeds cap");
  const std::size_t cells = std::size_t{1} << (n + p + m);
  std::vector<BitVector> table(cells, BitVector::zeros(n + p));
  for (std::uint64_t sx = 0; sx < (1u << n); ++sx)
    for (std::uint64_t sy = 0; sy < (1u << p); ++sy)
      for (std::uint64_t in = 0; in < (1u << m); ++in) {
        const BitVector mu(n, sx), lambda(p, sy), nu(m, in);
        const BitVector fx = f.eval(mu, nu);
        const BitVector state = mu.concat(lambda);
        table[(state.to_index() << m) | nu.to_index()] =
            fx.concat(h.eval(lambda, fx));
      }
  return GeneratorFunction(n + p, m, std::move(table));
}

}  // namespace ars
