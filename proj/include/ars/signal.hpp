#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/errors.hpp"
#include "ars/rational.hpp"

namespace ars {

// An eventually constant n-signal: a right-continuous piecewise-constant
// function of real time. The value is `initial` on (-inf, t0) and the k-th
// switch value on [t_k, t_{k+1}). Canonical form keeps only genuine value
// changes, so structural equality is trajectory equality.
class Signal {
public:
  using Switch = std::pair<Rational, BitVector>;

  explicit Signal(BitVector initial)
      : width_(initial.width()), initial_(std::move(initial)) {}

  // Canonicalizing constructor: requires strictly increasing times, drops
  // switches that do not change the running value.
  Signal(BitVector initial, const std::vector<Switch>& raw)
      : width_(initial.width()), initial_(std::move(initial)) {
    const BitVector* running = &initial_;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k].second.width() != width_)
        throw WidthMismatch("switch value width " +
                            std::to_string(raw[k].second.width()) +
                            " differs from signal width " +
                            std::to_string(width_));
      if (k > 0 && !(raw[k - 1].first < raw[k].first))
        throw NonIncreasingTimes("switch times not strictly increasing at t=" +
                                 raw[k].first.to_string());
      if (raw[k].second != *running) {
        switches_.push_back(raw[k]);
        running = &switches_.back().second;
      }
    }
  }

  int width() const { return width_; }
  const BitVector& initial_value() const { return initial_; }
  const std::vector<Switch>& switches() const { return switches_; }

  const BitVector& final_value() const {
    return switches_.empty() ? initial_ : switches_.back().second;
  }

  std::optional<Rational> last_switch_time() const {
    if (switches_.empty()) return std::nullopt;
    return switches_.back().first;
  }

  bool is_constant() const { return switches_.empty(); }

  // Value of the latest switch with time <= t; initial before the first.
  const BitVector& value_at(const Rational& t) const {
    const BitVector* v = &initial_;
    for (const auto& [time, value] : switches_) {
      if (t < time) break;
      v = &value;
    }
    return *v;
  }

  // Left limit x(t-0): latest switch with time strictly < t.
  const BitVector& left_limit(const Rational& t) const {
    const BitVector* v = &initial_;
    for (const auto& [time, value] : switches_) {
      if (!(time < t)) break;
      v = &value;
    }
    return *v;
  }

  Signal project(int lo, int hi) const {
    std::vector<Switch> raw;
    raw.reserve(switches_.size());
    for (const auto& [time, value] : switches_)
      raw.emplace_back(time, value.slice(lo, hi));
    return Signal(initial_.slice(lo, hi), raw);
  }

  friend auto operator<=>(const Signal&, const Signal&) = default;

private:
  int width_;
  BitVector initial_;
  std::vector<Switch> switches_;
};

// The identification S^(n) x S^(m) = S^(n+m): pointwise concatenation over
// the merged switch grid.
inline Signal pair_signals(const Signal& x, const Signal& u) {
  std::vector<Signal::Switch> raw;
  const auto& xs = x.switches();
  const auto& us = u.switches();
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < us.size()) {
    Rational t;
    if (j >= us.size() || (i < xs.size() && xs[i].first < us[j].first)) {
      t = xs[i].first;
    } else {
      t = us[j].first;
    }
    if (i < xs.size() && xs[i].first == t) ++i;
    if (j < us.size() && us[j].first == t) ++j;
    const BitVector xv = i ? xs[i - 1].second : x.initial_value();
    const BitVector uv = j ? us[j - 1].second : u.initial_value();
    raw.emplace_back(t, xv.concat(uv));
  }
  return Signal(x.initial_value().concat(u.initial_value()), raw);
}

inline Signal complement(const Signal& x) {
  std::vector<Signal::Switch> raw;
  raw.reserve(x.switches().size());
  for (const auto& [time, value] : x.switches()) raw.emplace_back(time, ~value);
  return Signal(~x.initial_value(), raw);
}

// DSL literal body: "init 01 ; 1:11 ; 3/2:01".
inline std::string to_literal(const Signal& x) {
  std::string out = "init " + x.initial_value().to_string();
  for (const auto& [time, value] : x.switches())
    out += " ; " + time.to_string() + ":" + value.to_string();
  return out;
}

}  // namespace ars
