#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/errors.hpp"
#include "ars/genfn.hpp"
#include "ars/schedule.hpp"
#include "ars/signal.hpp"
#include "ars/solver.hpp"

namespace ars {

// An asynchronous system held explicitly: a finite map from admissible
// input signals to nonempty sets of possible state signals.
class ExplicitSystem {
public:
  using EntryMap = std::map<Signal, std::set<Signal>>;

  ExplicitSystem(int input_width, int state_width, EntryMap entries)
      : input_width_(input_width),
        state_width_(state_width),
        entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("system must have at least one input");
    for (const auto& [u, states] : entries_) {
      if (u.width() != input_width_)
        throw WidthMismatch("input signal width differs from declared width");
      if (states.empty())
        throw Error("state set must be nonempty for every input");
      for (const auto& x : states)
        if (x.width() != state_width_)
          throw WidthMismatch("state signal width differs from declared width");
    }
  }

  int input_width() const { return input_width_; }
  int state_width() const { return state_width_; }
  const EntryMap& entries() const { return entries_; }

  bool has_input(const Signal& u) const { return entries_.count(u) > 0; }
  const std::set<Signal>& states(const Signal& u) const {
    const auto it = entries_.find(u);
    if (it == entries_.end()) throw Error("input not in the system's domain");
    return it->second;
  }

  std::set<Signal> domain() const {
    std::set<Signal> d;
    for (const auto& [u, states] : entries_) d.insert(u);
    return d;
  }

  friend bool operator==(const ExplicitSystem&, const ExplicitSystem&) = default;

private:
  int input_width_;
  int state_width_;
  EntryMap entries_;
};

// i_f: per input, the set of initial values of its possible states.
struct InitialStateFunction {
  int input_width = 0;
  int state_width = 0;
  std::map<Signal, std::set<BitVector>> entries;

  friend bool operator==(const InitialStateFunction&,
                         const InitialStateFunction&) = default;
};

// pi_f: maps (initial value, input) pairs in W_f to nonempty sets of
// schedules realizing the system's states.
struct ComputationFunction {
  int state_width = 0;
  int input_width = 0;
  std::map<std::pair<BitVector, Signal>, std::set<Schedule>> entries;

  friend bool operator==(const ComputationFunction&,
                         const ComputationFunction&) = default;
};

inline InitialStateFunction initial_state_function(const ExplicitSystem& f) {
  InitialStateFunction out;
  out.input_width = f.input_width();
  out.state_width = f.state_width();
  for (const auto& [u, states] : f.entries()) {
    auto& set = out.entries[u];
    for (const auto& x : states) set.insert(x.initial_value());
  }
  return out;
}

// W_f = {(x(-inf+0), u) | u in U, x in f(u)}.
inline std::set<std::pair<BitVector, Signal>> computation_domain(
    const ExplicitSystem& f) {
  std::set<std::pair<BitVector, Signal>> w;
  for (const auto& [u, states] : f.entries())
    for (const auto& x : states) w.emplace(x.initial_value(), u);
  return w;
}

namespace detail {

inline void check_same_widths(const ExplicitSystem& f, const ExplicitSystem& g,
                              const char* what) {
  if (f.input_width() != g.input_width() ||
      f.state_width() != g.state_width())
    throw WidthMismatch(std::string(what) +
                        " requires systems of equal widths");
}

}  // namespace detail

// f is a subsystem of g: dom(f) within dom(g) and pointwise state subsets.
inline bool is_subsystem(const ExplicitSystem& f, const ExplicitSystem& g) {
  detail::check_same_widths(f, g, "is_subsystem");
  for (const auto& [u, states] : f.entries()) {
    if (!g.has_input(u)) return false;
    const auto& gs = g.states(u);
    for (const auto& x : states)
      if (!gs.count(x)) return false;
  }
  return true;
}

// f*: inputs and states complemented, f*(u) = {~x | x in f(~u)}.
inline ExplicitSystem dual_system(const ExplicitSystem& f) {
  ExplicitSystem::EntryMap entries;
  for (const auto& [u, states] : f.entries()) {
    auto& set = entries[complement(u)];
    for (const auto& x : states) set.insert(complement(x));
  }
  return ExplicitSystem(f.input_width(), f.state_width(), std::move(entries));
}

// (f x f')(u, u') = f(u) x f'(u') over the paired inputs.
inline ExplicitSystem cartesian_product(const ExplicitSystem& f,
                                        const ExplicitSystem& fp) {
  ExplicitSystem::EntryMap entries;
  for (const auto& [u, xs] : f.entries())
    for (const auto& [up, xps] : fp.entries()) {
      auto& set = entries[pair_signals(u, up)];
      for (const auto& x : xs)
        for (const auto& xp : xps) set.insert(pair_signals(x, xp));
    }
  return ExplicitSystem(f.input_width() + fp.input_width(),
                        f.state_width() + fp.state_width(),
                        std::move(entries));
}

// (f || f1')(u) = f(u) x f1'(u) on the common domain.
inline ExplicitSystem parallel_connection(const ExplicitSystem& f,
                                          const ExplicitSystem& f1p) {
  if (f.input_width() != f1p.input_width())
    throw InputWidthMismatch(
        "parallel connection requires equal input widths");
  ExplicitSystem::EntryMap entries;
  for (const auto& [u, xs] : f.entries()) {
    if (!f1p.has_input(u)) continue;
    auto& set = entries[u];
    for (const auto& x : xs)
      for (const auto& xp : f1p.states(u)) set.insert(pair_signals(x, xp));
  }
  if (entries.empty())
    throw EmptyCommonInput("parallel connection undefined: no common input");
  return ExplicitSystem(f.input_width(),
                        f.state_width() + f1p.state_width(),
                        std::move(entries));
}

namespace detail {

inline void check_composable(const ExplicitSystem& h, const ExplicitSystem& f) {
  if (h.input_width() != f.state_width())
    throw WidthMismatch(
        "serial connection requires h's input width to equal f's state width");
  std::vector<std::string> missing;
  for (const auto& [u, xs] : f.entries())
    for (const auto& x : xs)
      if (!h.has_input(x)) {
        missing.push_back("a state of f(u) with initial value " +
                          x.initial_value().to_string());
        if (missing.size() >= 3) break;
      }
  if (!missing.empty()) {
    std::string msg = "states of f missing from h's domain:";
    for (const auto& s : missing) msg += " " + s + ";";
    throw ComposabilityError(msg);
  }
}

}  // namespace detail

// (h o f)(u) = union of h(x) over x in f(u).
inline ExplicitSystem serial_compose(const ExplicitSystem& h,
                                     const ExplicitSystem& f) {
  detail::check_composable(h, f);
  ExplicitSystem::EntryMap entries;
  for (const auto& [u, xs] : f.entries()) {
    auto& set = entries[u];
    for (const auto& x : xs)
      for (const auto& y : h.states(x)) set.insert(y);
  }
  return ExplicitSystem(f.input_width(), h.state_width(), std::move(entries));
}

// (h * f)(u) = {(x, y) | x in f(u), y in h(x)}: the intermediate signal is
// kept as the first state component.
inline ExplicitSystem serial_star_system(const ExplicitSystem& h,
                                         const ExplicitSystem& f) {
  detail::check_composable(h, f);
  ExplicitSystem::EntryMap entries;
  for (const auto& [u, xs] : f.entries()) {
    auto& set = entries[u];
    for (const auto& x : xs)
      for (const auto& y : h.states(x)) set.insert(pair_signals(x, y));
  }
  return ExplicitSystem(f.input_width(), f.state_width() + h.state_width(),
                        std::move(entries));
}

// (f n g)(u) = f(u) n g(u) on W = {u | u in both domains, overlap nonempty}.
inline ExplicitSystem intersection(const ExplicitSystem& f,
                                   const ExplicitSystem& g) {
  detail::check_same_widths(f, g, "intersection");
  ExplicitSystem::EntryMap entries;
  for (const auto& [u, xs] : f.entries()) {
    if (!g.has_input(u)) continue;
    const auto& gs = g.states(u);
    std::set<Signal> common;
    for (const auto& x : xs)
      if (gs.count(x)) common.insert(x);
    if (!common.empty()) entries.emplace(u, std::move(common));
  }
  if (entries.empty())
    throw EmptyIntersection(
        "intersection undefined: no input with overlapping states");
  return ExplicitSystem(f.input_width(), f.state_width(), std::move(entries));
}

// (f u g): f(u) off g's domain, g(u) off f's, pointwise union on overlap.
inline ExplicitSystem union_systems(const ExplicitSystem& f,
                                    const ExplicitSystem& g) {
  detail::check_same_widths(f, g, "union");
  ExplicitSystem::EntryMap entries = f.entries();
  for (const auto& [u, states] : g.entries())
    entries[u].insert(states.begin(), states.end());
  return ExplicitSystem(f.input_width(), f.state_width(), std::move(entries));
}

// ---------------------------------------------------------------------------
// Derived initial-state functions, built from the operand functions by the
// per-combinator formulas (not recomputed from the combined system, so the
// two can be compared).

inline InitialStateFunction derived_initial_dual(const InitialStateFunction& i_f) {
  InitialStateFunction out;
  out.input_width = i_f.input_width;
  out.state_width = i_f.state_width;
  for (const auto& [u, set] : i_f.entries) {
    auto& dset = out.entries[complement(u)];
    for (const auto& mu : set) dset.insert(~mu);
  }
  return out;
}

inline InitialStateFunction derived_initial_product(
    const InitialStateFunction& i_f, const InitialStateFunction& i_g) {
  InitialStateFunction out;
  out.input_width = i_f.input_width + i_g.input_width;
  out.state_width = i_f.state_width + i_g.state_width;
  for (const auto& [u, fset] : i_f.entries)
    for (const auto& [up, gset] : i_g.entries) {
      auto& set = out.entries[pair_signals(u, up)];
      for (const auto& mu : fset)
        for (const auto& mup : gset) set.insert(mu.concat(mup));
    }
  return out;
}

inline InitialStateFunction derived_initial_parallel(
    const InitialStateFunction& i_f, const InitialStateFunction& i_g) {
  if (i_f.input_width != i_g.input_width)
    throw InputWidthMismatch("parallel requires equal input widths");
  InitialStateFunction out;
  out.input_width = i_f.input_width;
  out.state_width = i_f.state_width + i_g.state_width;
  for (const auto& [u, fset] : i_f.entries) {
    const auto it = i_g.entries.find(u);
    if (it == i_g.entries.end()) continue;
    auto& set = out.entries[u];
    for (const auto& mu : fset)
      for (const auto& mup : it->second) set.insert(mu.concat(mup));
  }
  if (out.entries.empty())
    throw EmptyCommonInput("parallel connection undefined: no common input");
  return out;
}

// i_{h*f}(u) = {(mu, lambda) | mu in i_f(u), lambda in the union of i_h(x)
// over x in f(u) with x(-inf+0) = mu}.
inline InitialStateFunction derived_initial_serial_star(
    const ExplicitSystem& f, const InitialStateFunction& i_f,
    const InitialStateFunction& i_h) {
  InitialStateFunction out;
  out.input_width = i_f.input_width;
  out.state_width = i_f.state_width + i_h.state_width;
  for (const auto& [u, fset] : i_f.entries) {
    auto& set = out.entries[u];
    for (const auto& mu : fset)
      for (const auto& x : f.states(u)) {
        if (x.initial_value() != mu) continue;
        const auto it = i_h.entries.find(x);
        if (it == i_h.entries.end())
          throw ComposabilityError(
              "state of f missing from the domain of i_h");
        for (const auto& lambda : it->second) set.insert(mu.concat(lambda));
      }
  }
  return out;
}

inline InitialStateFunction derived_initial_intersection(
    const InitialStateFunction& i_f, const InitialStateFunction& i_g,
    const std::set<Signal>& domain) {
  InitialStateFunction out;
  out.input_width = i_f.input_width;
  out.state_width = i_f.state_width;
  for (const auto& u : domain) {
    const auto fit = i_f.entries.find(u);
    const auto git = i_g.entries.find(u);
    if (fit == i_f.entries.end() || git == i_g.entries.end())
      throw Error("intersection domain outside the operands' domains");
    auto& set = out.entries[u];
    for (const auto& mu : fit->second)
      if (git->second.count(mu)) set.insert(mu);
  }
  return out;
}

inline InitialStateFunction derived_initial_union(
    const InitialStateFunction& i_f, const InitialStateFunction& i_g) {
  if (i_f.state_width != i_g.state_width ||
      i_f.input_width != i_g.input_width)
    throw WidthMismatch("union requires equal widths");
  InitialStateFunction out;
  out.input_width = i_f.input_width;
  out.state_width = i_f.state_width;
  out.entries = i_f.entries;
  for (const auto& [u, set] : i_g.entries)
    out.entries[u].insert(set.begin(), set.end());
  return out;
}

// ---------------------------------------------------------------------------
// Derived computation functions per the per-combinator formulas.

inline ComputationFunction derived_computation_dual(
    const ComputationFunction& pi_f) {
  ComputationFunction out;
  out.state_width = pi_f.state_width;
  out.input_width = pi_f.input_width;
  for (const auto& [key, scheds] : pi_f.entries)
    out.entries[{~key.first, complement(key.second)}] = scheds;
  return out;
}

inline ComputationFunction derived_computation_product(
    const ComputationFunction& pi_f, const ComputationFunction& pi_g) {
  ComputationFunction out;
  out.state_width = pi_f.state_width + pi_g.state_width;
  out.input_width = pi_f.input_width + pi_g.input_width;
  for (const auto& [fk, fs] : pi_f.entries)
    for (const auto& [gk, gs] : pi_g.entries) {
      auto& set = out.entries[{fk.first.concat(gk.first),
                               pair_signals(fk.second, gk.second)}];
      for (const auto& rho : fs)
        for (const auto& rhop : gs) set.insert(pair_schedules(rho, rhop));
    }
  return out;
}

inline ComputationFunction derived_computation_parallel(
    const ComputationFunction& pi_f, const ComputationFunction& pi_g) {
  if (pi_f.input_width != pi_g.input_width)
    throw InputWidthMismatch("parallel requires equal input widths");
  ComputationFunction out;
  out.state_width = pi_f.state_width + pi_g.state_width;
  out.input_width = pi_f.input_width;
  for (const auto& [fk, fs] : pi_f.entries)
    for (const auto& [gk, gs] : pi_g.entries) {
      if (fk.second != gk.second) continue;
      auto& set = out.entries[{fk.first.concat(gk.first), fk.second}];
      for (const auto& rho : fs)
        for (const auto& rhop : gs) set.insert(pair_schedules(rho, rhop));
    }
  return out;
}

// pi_{h*f}((mu, lambda), u) = {(rho, w) | rho in pi_f(mu, u), w in the
// union of pi_h(lambda, x) over x in f(u) with x(-inf+0) = mu}.
inline ComputationFunction derived_computation_serial_star(
    const ExplicitSystem& f, const ExplicitSystem& h,
    const ComputationFunction& pi_f, const ComputationFunction& pi_h) {
  ComputationFunction out;
  out.state_width = pi_f.state_width + pi_h.state_width;
  out.input_width = pi_f.input_width;
  for (const auto& [u, xs] : f.entries()) {
    for (const auto& x : xs)
      for (const auto& y : h.states(x)) {
        const BitVector mu = x.initial_value();
        const BitVector lambda = y.initial_value();
        auto& set = out.entries[{mu.concat(lambda), u}];
        const auto fit = pi_f.entries.find({mu, u});
        if (fit == pi_f.entries.end())
          throw Error("pi_f missing an entry of W_f");
        for (const auto& xp : xs) {
          if (xp.initial_value() != mu) continue;
          const auto hit = pi_h.entries.find({lambda, xp});
          if (hit == pi_h.entries.end()) continue;
          for (const auto& rho : fit->second)
            for (const auto& w : hit->second)
              set.insert(pair_schedules(rho, w));
        }
      }
  }
  return out;
}

// pi_{f n g}(mu, u) keeps the schedules of pi_f whose trajectory is matched
// by some schedule of pi_g; both systems share the generator function.
inline ComputationFunction derived_computation_intersection(
    const ExplicitSystem& f, const ExplicitSystem& g,
    const GeneratorFunction& fn, const ComputationFunction& pi_f,
    const ComputationFunction& pi_g, long max_events = 10000) {
  const ExplicitSystem combined = intersection(f, g);
  ComputationFunction out;
  out.state_width = pi_f.state_width;
  out.input_width = pi_f.input_width;
  for (const auto& [u, xs] : combined.entries()) {
    for (const auto& x : xs) {
      const BitVector mu = x.initial_value();
      auto& set = out.entries[{mu, u}];
      const auto fit = pi_f.entries.find({mu, u});
      const auto git = pi_g.entries.find({mu, u});
      if (fit == pi_f.entries.end() || git == pi_g.entries.end())
        throw Error("computation functions missing an entry of W");
      for (const auto& rho : fit->second) {
        const Signal traj = solve(fn, mu, u, rho, max_events);
        for (const auto& rhop : git->second) {
          if (solve(fn, mu, u, rhop, max_events) == traj) {
            set.insert(rho);
            break;
          }
        }
      }
    }
  }
  return out;
}

inline ComputationFunction derived_computation_union(
    const ComputationFunction& pi_f, const ComputationFunction& pi_g) {
  if (pi_f.state_width != pi_g.state_width ||
      pi_f.input_width != pi_g.input_width)
    throw WidthMismatch("union requires equal widths");
  ComputationFunction out;
  out.state_width = pi_f.state_width;
  out.input_width = pi_f.input_width;
  out.entries = pi_f.entries;
  for (const auto& [key, scheds] : pi_g.entries) {
    auto& set = out.entries[key];
    set.insert(scheds.begin(), scheds.end());
  }
  return out;
}

}  // namespace ars
