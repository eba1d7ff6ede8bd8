#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/errors.hpp"
#include "ars/genfn.hpp"
#include "ars/parallel.hpp"
#include "ars/schedule.hpp"
#include "ars/signal.hpp"
#include "ars/solver.hpp"
#include "ars/systems.hpp"

namespace ars {

struct GenerationCounterexample {
  Signal input;
  Signal state;
  std::string conflict;
};

// Result of deciding whether a generator function generates a system. On
// success the computation function assembled from the membership witnesses
// is included, and every stored witness replays to its state.
struct GenerationReport {
  bool generated = false;
  std::optional<ComputationFunction> computation;
  std::optional<GenerationCounterexample> counterexample;
};

inline GenerationReport check_generated(const ExplicitSystem& f,
                                        const GeneratorFunction& fn,
                                        long max_events = 10000,
                                        int jobs = 1) {
  if (f.state_width() != fn.state_width() ||
      f.input_width() != fn.input_width())
    throw WidthMismatch("system and generator function widths differ");

  std::vector<std::pair<const Signal*, const Signal*>> pairs;
  for (const auto& [u, states] : f.entries())
    for (const auto& x : states) pairs.emplace_back(&u, &x);

  std::vector<MembershipResult> results(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    results[i] = membership(fn, *pairs[i].second, *pairs[i].first);
  });

  GenerationReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!results[i].member) {
      report.counterexample = GenerationCounterexample{
          *pairs[i].first, *pairs[i].second, *results[i].conflict};
      return report;
    }
  }

  ComputationFunction pi;
  pi.state_width = f.state_width();
  pi.input_width = f.input_width();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Signal& u = *pairs[i].first;
    const Signal& x = *pairs[i].second;
    const Schedule& witness = *results[i].witness;
    if (solve(fn, x.initial_value(), u, witness, max_events) != x) {
      report.counterexample =
          GenerationCounterexample{u, x, "witness replay mismatch"};
      return report;
    }
    pi.entries[{x.initial_value(), u}].insert(witness);
  }
  report.generated = true;
  report.computation = std::move(pi);
  return report;
}

// Builds a generator function from the necessary table constraints: every
// changed coordinate at a switch pins a cell bit, every final pair pins a
// whole fixed-point row. Unconstrained bits fall back to the identity
// Y_i(mu, nu) = mu_i. Returns nothing when two constraints collide.
inline std::optional<GeneratorFunction> synthesize_generator(
    const ExplicitSystem& f) {
  const int n = f.state_width();
  const int m = f.input_width();
  if (n + m > GeneratorFunction::kMaxArity)
    throw ArityCapExceeded("synthesis arity n+m = " + std::to_string(n + m) +
                           " exceeds cap");

  const std::size_t cells = std::size_t{1} << (n + m);
  std::vector<std::int8_t> constraint(cells * static_cast<std::size_t>(n), -1);
  auto require = [&](std::size_t cell, int i, bool v) {
    std::int8_t& c = constraint[cell * static_cast<std::size_t>(n) + i - 1];
    if (c == -1) {
      c = v ? 1 : 0;
      return true;
    }
    return c == (v ? 1 : 0);
  };
  auto cell_index = [&](const BitVector& state, const BitVector& input) {
    return (state.to_index() << m) | input.to_index();
  };

  for (const auto& [u, states] : f.entries()) {
    for (const auto& x : states) {
      for (const auto& [t, value] : x.switches()) {
        const BitVector& before = x.left_limit(t);
        const std::size_t cell = cell_index(before, u.left_limit(t));
        for (int i = 1; i <= n; ++i) {
          if (value.bit(i) == before.bit(i)) continue;
          if (!require(cell, i, value.bit(i))) return std::nullopt;
        }
      }
      const BitVector& fin = x.final_value();
      const std::size_t cell = cell_index(fin, u.final_value());
      for (int i = 1; i <= n; ++i)
        if (!require(cell, i, fin.bit(i))) return std::nullopt;
    }
  }

  std::vector<BitVector> table;
  table.reserve(cells);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const BitVector state(n, cell >> m);
    BitVector row = state;  // identity fill
    for (int i = 1; i <= n; ++i) {
      const std::int8_t c = constraint[cell * static_cast<std::size_t>(n) + i - 1];
      if (c != -1) row = row.with_bit(i, c == 1);
    }
    table.push_back(row);
  }
  return GeneratorFunction(n, m, std::move(table));
}

// ---------------------------------------------------------------------------
// Theorem harness.

enum class TheoremId {
  Subsystem,
  Dual,
  Product,
  Parallel,
  Serial,
  Intersection,
  Union,
};

inline const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Subsystem:
      return "subsystem";
    case TheoremId::Dual:
      return "dual";
    case TheoremId::Product:
      return "product";
    case TheoremId::Parallel:
      return "parallel";
    case TheoremId::Serial:
      return "serial";
    case TheoremId::Intersection:
      return "intersection";
    case TheoremId::Union:
      return "union";
  }
  return "?";
}

// One verified claim. A failing check carries a human-readable witness and
// a replay closure that re-executes the claim on the recorded data; the
// replay returns true when it reproduces the failure.
struct TheoremCheck {
  std::string claim;
  bool pass = true;
  std::string witness;
  std::function<bool()> replay;
};

struct TheoremReport {
  TheoremId id;
  bool holds = false;
  std::vector<TheoremCheck> checks;
};

namespace detail {

inline TheoremReport finish_report(TheoremId id, std::vector<TheoremCheck> checks) {
  TheoremReport report;
  report.id = id;
  report.holds = true;
  for (const auto& c : checks) report.holds = report.holds && c.pass;
  report.checks = std::move(checks);
  return report;
}

inline std::string describe_pair(const BitVector& mu, const Signal& u) {
  return "mu=" + mu.to_string() + ", u=[" + to_literal(u) + "]";
}

inline TheoremCheck generation_check(const std::string& label,
                                     const ExplicitSystem& sys,
                                     const GeneratorFunction& fn,
                                     long max_events, int jobs) {
  TheoremCheck check;
  check.claim = label;
  const GenerationReport rep = check_generated(sys, fn, max_events, jobs);
  check.pass = rep.generated;
  if (!rep.generated) {
    const auto& ce = *rep.counterexample;
    check.witness = "state [" + to_literal(ce.state) + "] under input [" +
                    to_literal(ce.input) + "]: " + ce.conflict;
    Signal u = ce.input, x = ce.state;
    GeneratorFunction fcopy = fn;
    check.replay = [fcopy, x, u] { return !membership(fcopy, x, u).member; };
  }
  return check;
}

inline TheoremCheck initial_formula_check(const std::string& label,
                                          const ExplicitSystem& sys,
                                          const InitialStateFunction& formula) {
  TheoremCheck check;
  check.claim = label;
  const InitialStateFunction actual = initial_state_function(sys);
  check.pass = actual == formula;
  if (!check.pass) {
    for (const auto& [u, set] : formula.entries) {
      const auto it = actual.entries.find(u);
      if (it == actual.entries.end()) {
        check.witness = "formula has input [" + to_literal(u) +
                        "] outside the system's domain";
        break;
      }
      if (it->second != set) {
        check.witness = "at input [" + to_literal(u) + "]: formula gives {";
        for (const auto& mu : set) check.witness += mu.to_string() + " ";
        check.witness += "}, system has {";
        for (const auto& mu : it->second) check.witness += mu.to_string() + " ";
        check.witness += "}";
        break;
      }
    }
    if (check.witness.empty())
      check.witness = "system has inputs outside the formula's domain";
    ExplicitSystem scopy = sys;
    InitialStateFunction fcopy = formula;
    check.replay = [scopy, fcopy] {
      return !(initial_state_function(scopy) == fcopy);
    };
  }
  return check;
}

// The computation-function property: dom(pi) = W, every value nonempty and
// progressive, and per input the realized trajectories equal the system's
// state set.
inline std::vector<TheoremCheck> computation_checks(
    const std::string& label, const ExplicitSystem& sys,
    const GeneratorFunction& fn, const ComputationFunction& pi,
    long max_events) {
  std::vector<TheoremCheck> checks;

  {
    TheoremCheck dom;
    dom.claim = label + ": domain of pi is W";
    std::set<std::pair<BitVector, Signal>> keys;
    for (const auto& [key, scheds] : pi.entries) keys.insert(key);
    const auto w = computation_domain(sys);
    dom.pass = keys == w;
    if (!dom.pass) {
      for (const auto& key : keys)
        if (!w.count(key)) {
          dom.witness =
              "pi defined at (" + describe_pair(key.first, key.second) +
              ") which is not in W";
          break;
        }
      for (const auto& key : w)
        if (!keys.count(key)) {
          dom.witness = "pi missing W entry (" +
                        describe_pair(key.first, key.second) + ")";
          break;
        }
      ExplicitSystem scopy = sys;
      ComputationFunction pcopy = pi;
      dom.replay = [scopy, pcopy] {
        std::set<std::pair<BitVector, Signal>> k;
        for (const auto& [key, scheds] : pcopy.entries) k.insert(key);
        return !(k == computation_domain(scopy));
      };
    }
    checks.push_back(std::move(dom));
  }

  {
    TheoremCheck wf;
    wf.claim = label + ": pi values nonempty and progressive";
    for (const auto& [key, scheds] : pi.entries) {
      if (scheds.empty()) {
        wf.pass = false;
        wf.witness =
            "empty schedule set at (" + describe_pair(key.first, key.second) + ")";
        break;
      }
      for (const auto& rho : scheds)
        if (!rho.is_progressive()) {
          wf.pass = false;
          wf.witness = "non-progressive schedule at (" +
                       describe_pair(key.first, key.second) + ")";
          break;
        }
      if (!wf.pass) break;
    }
    if (!wf.pass) {
      ComputationFunction pcopy = pi;
      wf.replay = [pcopy] {
        for (const auto& [key, scheds] : pcopy.entries) {
          if (scheds.empty()) return true;
          for (const auto& rho : scheds)
            if (!rho.is_progressive()) return true;
        }
        return false;
      };
    }
    checks.push_back(std::move(wf));
  }

  {
    TheoremCheck realize;
    realize.claim = label + ": realized trajectories equal the state sets";
    for (const auto& [u, states] : sys.entries()) {
      std::set<Signal> realized;
      for (const auto& [key, scheds] : pi.entries) {
        if (!(key.second == u)) continue;
        for (const auto& rho : scheds)
          realized.insert(solve(fn, key.first, u, rho, max_events));
      }
      if (realized == states) continue;
      realize.pass = false;
      for (const auto& x : realized)
        if (!states.count(x)) {
          realize.witness = "under input [" + to_literal(u) +
                            "] a schedule realizes [" + to_literal(x) +
                            "] which is not a state of the system";
          break;
        }
      if (realize.witness.empty())
        for (const auto& x : states)
          if (!realized.count(x)) {
            realize.witness = "under input [" + to_literal(u) + "] state [" +
                              to_literal(x) + "] is realized by no schedule";
            break;
          }
      ExplicitSystem scopy = sys;
      GeneratorFunction fcopy = fn;
      ComputationFunction pcopy = pi;
      Signal ucopy = u;
      realize.replay = [scopy, fcopy, pcopy, ucopy, max_events] {
        std::set<Signal> r;
        for (const auto& [key, scheds] : pcopy.entries) {
          if (!(key.second == ucopy)) continue;
          for (const auto& rho : scheds)
            r.insert(solve(fcopy, key.first, ucopy, rho, max_events));
        }
        return !(r == scopy.states(ucopy));
      };
      break;
    }
    checks.push_back(std::move(realize));
  }

  return checks;
}

}  // namespace detail

// Section 2: f within g  <=>  domain inclusion, pointwise initial-value
// inclusion, and for every schedule of pi_f a trajectory-equal schedule in
// pi_g.
inline TheoremReport verify_subsystem_theorem(
    const ExplicitSystem& f, const ExplicitSystem& g,
    const GeneratorFunction& fn, const ComputationFunction& pi_f,
    const ComputationFunction& pi_g, long max_events = 10000) {
  const bool a = is_subsystem(f, g);

  bool b = true;
  std::string b_witness;
  const InitialStateFunction i_f = initial_state_function(f);
  const InitialStateFunction i_g = initial_state_function(g);
  for (const auto& [u, fset] : i_f.entries) {
    const auto git = i_g.entries.find(u);
    if (git == i_g.entries.end()) {
      b = false;
      b_witness = "input [" + to_literal(u) + "] is not admissible for g";
      break;
    }
    for (const auto& mu : fset)
      if (!git->second.count(mu)) {
        b = false;
        b_witness = "initial value " + mu.to_string() + " under input [" +
                    to_literal(u) + "] is not in i_g";
        break;
      }
    if (!b) break;
  }
  if (b) {
    for (const auto& [key, scheds] : pi_f.entries) {
      const auto git = pi_g.entries.find(key);
      for (const auto& rho : scheds) {
        const Signal traj = solve(fn, key.first, key.second, rho, max_events);
        bool matched = false;
        if (git != pi_g.entries.end())
          for (const auto& rhop : git->second)
            if (solve(fn, key.first, key.second, rhop, max_events) == traj) {
              matched = true;
              break;
            }
        if (!matched) {
          b = false;
          b_witness = "schedule [" + to_literal(rho) + "] at (" +
                      detail::describe_pair(key.first, key.second) +
                      ") has no trajectory-equal match in pi_g";
          break;
        }
      }
      if (!b) break;
    }
  }

  std::vector<TheoremCheck> checks;
  {
    TheoremCheck c;
    c.claim = "a) implies b): subsystem inclusion forces matching schedules";
    c.pass = !a || b;
    if (!c.pass) {
      c.witness = b_witness;
      ExplicitSystem fc = f, gc = g;
      c.replay = [fc, gc] { return is_subsystem(fc, gc); };
    }
    checks.push_back(std::move(c));
  }
  {
    TheoremCheck c;
    c.claim = "b) implies a): matching schedules force subsystem inclusion";
    c.pass = !b || a;
    if (!c.pass) {
      c.witness = "condition b) holds but f is not a subsystem of g";
      ExplicitSystem fc = f, gc = g;
      c.replay = [fc, gc] { return !is_subsystem(fc, gc); };
    }
    checks.push_back(std::move(c));
  }
  return detail::finish_report(TheoremId::Subsystem, std::move(checks));
}

// Section 3: the dual system is generated by the dual function, with the
// complement-conjugated initial-state and computation functions.
inline TheoremReport verify_dual_theorem(const ExplicitSystem& f,
                                         const GeneratorFunction& fn,
                                         const ComputationFunction& pi_f,
                                         long max_events = 10000,
                                         int jobs = 1) {
  const ExplicitSystem fstar = dual_system(f);
  const GeneratorFunction fnstar = dual(fn);

  std::vector<TheoremCheck> checks;
  checks.push_back(detail::generation_check(
      "f* is generated by Y*", fstar, fnstar, max_events, jobs));
  checks.push_back(detail::initial_formula_check(
      "initial-state function of f* is i_{f*}", fstar,
      derived_initial_dual(initial_state_function(f))));

  {
    TheoremCheck c;
    c.claim = "complement conjugation: ~solve(Y) = solve(Y*) on ~inputs";
    for (const auto& [key, scheds] : pi_f.entries) {
      for (const auto& rho : scheds) {
        const Signal lhs =
            complement(solve(fn, key.first, key.second, rho, max_events));
        const Signal rhs = solve(fnstar, ~key.first, complement(key.second),
                                 rho, max_events);
        if (lhs == rhs) continue;
        c.pass = false;
        c.witness = "mismatch at (" +
                    detail::describe_pair(key.first, key.second) +
                    ") with schedule [" + to_literal(rho) + "]";
        GeneratorFunction f1 = fn, f2 = fnstar;
        BitVector mu = key.first;
        Signal u = key.second;
        Schedule r = rho;
        c.replay = [f1, f2, mu, u, r, max_events] {
          return !(complement(solve(f1, mu, u, r, max_events)) ==
                   solve(f2, ~mu, complement(u), r, max_events));
        };
        break;
      }
      if (!c.pass) break;
    }
    checks.push_back(std::move(c));
  }

  auto more = detail::computation_checks(
      "computation function of f* is pi_{f*}", fstar, fnstar,
      derived_computation_dual(pi_f), max_events);
  for (auto& c : more) checks.push_back(std::move(c));
  return detail::finish_report(TheoremId::Dual, std::move(checks));
}

// Section 4: the product system is generated by the product function and
// paired schedules decompose coordinatewise.
inline TheoremReport verify_product_theorem(
    const ExplicitSystem& f, const ExplicitSystem& fp,
    const GeneratorFunction& fn, const GeneratorFunction& fnp,
    const ComputationFunction& pi_f, const ComputationFunction& pi_fp,
    long max_events = 10000, int jobs = 1) {
  const ExplicitSystem comb = cartesian_product(f, fp);
  const GeneratorFunction combfn = product(fn, fnp);

  std::vector<TheoremCheck> checks;
  checks.push_back(detail::generation_check(
      "f x f' is generated by Y x Y'", comb, combfn, max_events, jobs));
  checks.push_back(detail::initial_formula_check(
      "initial-state function is i_f x i_{f'}", comb,
      derived_initial_product(initial_state_function(f),
                              initial_state_function(fp))));

  {
    TheoremCheck c;
    c.claim = "decomposition: solve(YxY', paired) = pair of solves";
    for (const auto& [fk, fs] : pi_f.entries) {
      for (const auto& [gk, gs] : pi_fp.entries) {
        for (const auto& rho : fs) {
          for (const auto& rhop : gs) {
            const Signal left = solve(fn, fk.first, fk.second, rho, max_events);
            const Signal right =
                solve(fnp, gk.first, gk.second, rhop, max_events);
            const Signal combined =
                solve(combfn, fk.first.concat(gk.first),
                      pair_signals(fk.second, gk.second),
                      pair_schedules(rho, rhop), max_events);
            if (combined == pair_signals(left, right)) continue;
            c.pass = false;
            c.witness = "mismatch at (" +
                        detail::describe_pair(fk.first, fk.second) + ") x (" +
                        detail::describe_pair(gk.first, gk.second) + ")";
            GeneratorFunction f1 = fn, f2 = fnp, fc = combfn;
            BitVector mu1 = fk.first, mu2 = gk.first;
            Signal u1 = fk.second, u2 = gk.second;
            Schedule r1 = rho, r2 = rhop;
            c.replay = [f1, f2, fc, mu1, mu2, u1, u2, r1, r2, max_events] {
              return !(solve(fc, mu1.concat(mu2), pair_signals(u1, u2),
                             pair_schedules(r1, r2), max_events) ==
                       pair_signals(solve(f1, mu1, u1, r1, max_events),
                                    solve(f2, mu2, u2, r2, max_events)));
            };
            break;
          }
          if (!c.pass) break;
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    checks.push_back(std::move(c));
  }

  auto more = detail::computation_checks(
      "computation function is pi_f x pi_{f'}", comb, combfn,
      derived_computation_product(pi_f, pi_fp), max_events);
  for (auto& c : more) checks.push_back(std::move(c));
  return detail::finish_report(TheoremId::Product, std::move(checks));
}

// Section 5: like the product, under a shared input.
inline TheoremReport verify_parallel_theorem(
    const ExplicitSystem& f, const ExplicitSystem& f1p,
    const GeneratorFunction& fn, const GeneratorFunction& fn1p,
    const ComputationFunction& pi_f, const ComputationFunction& pi_f1p,
    long max_events = 10000, int jobs = 1) {
  const ExplicitSystem comb = parallel_connection(f, f1p);
  const GeneratorFunction combfn = parallel(fn, fn1p);

  std::vector<TheoremCheck> checks;
  checks.push_back(detail::generation_check(
      "f || f1' is generated by Y || Y1'", comb, combfn, max_events, jobs));
  checks.push_back(detail::initial_formula_check(
      "initial-state function is i_{f||f1'}", comb,
      derived_initial_parallel(initial_state_function(f),
                               initial_state_function(f1p))));

  {
    TheoremCheck c;
    c.claim = "decomposition under a shared input";
    for (const auto& [fk, fs] : pi_f.entries) {
      for (const auto& [gk, gs] : pi_f1p.entries) {
        if (!(fk.second == gk.second)) continue;
        if (!comb.has_input(fk.second)) continue;
        for (const auto& rho : fs) {
          for (const auto& rhop : gs) {
            const Signal left = solve(fn, fk.first, fk.second, rho, max_events);
            const Signal right =
                solve(fn1p, gk.first, gk.second, rhop, max_events);
            const Signal combined =
                solve(combfn, fk.first.concat(gk.first), fk.second,
                      pair_schedules(rho, rhop), max_events);
            if (combined == pair_signals(left, right)) continue;
            c.pass = false;
            c.witness = "mismatch at (" +
                        detail::describe_pair(fk.first, fk.second) +
                        ") paired with mu'=" + gk.first.to_string();
            GeneratorFunction f1 = fn, f2 = fn1p, fc = combfn;
            BitVector mu1 = fk.first, mu2 = gk.first;
            Signal u = fk.second;
            Schedule r1 = rho, r2 = rhop;
            c.replay = [f1, f2, fc, mu1, mu2, u, r1, r2, max_events] {
              return !(solve(fc, mu1.concat(mu2), u, pair_schedules(r1, r2),
                             max_events) ==
                       pair_signals(solve(f1, mu1, u, r1, max_events),
                                    solve(f2, mu2, u, r2, max_events)));
            };
            break;
          }
          if (!c.pass) break;
        }
        if (!c.pass) break;
      }
      if (!c.pass) break;
    }
    checks.push_back(std::move(c));
  }

  auto more = detail::computation_checks(
      "computation function is pi_{f||f1'}", comb, combfn,
      derived_computation_parallel(pi_f, pi_f1p), max_events);
  for (auto& c : more) checks.push_back(std::move(c));
  return detail::finish_report(TheoremId::Parallel, std::move(checks));
}

// Section 6: h*f under theta*Y. The pairing in pi_{h*f} draws the second
// schedule from any x with a matching initial value, and the second stage
// of theta*Y reads Y(x(t-0), u(t-0)) rather than x(t-0); whether every
// replay stays inside (h*f)(u) is checked instance by instance and
// reported with a full witness either way.
inline TheoremReport verify_serial_theorem(
    const ExplicitSystem& f, const ExplicitSystem& h,
    const GeneratorFunction& fn, const GeneratorFunction& hfn,
    const ComputationFunction& pi_f, const ComputationFunction& pi_h,
    long max_events = 10000, int jobs = 1) {
  const ExplicitSystem comb = serial_star_system(h, f);
  const GeneratorFunction combfn = serial_star(hfn, fn);

  std::vector<TheoremCheck> checks;
  checks.push_back(detail::generation_check(
      "h*f is generated by theta*Y", comb, combfn, max_events, jobs));
  checks.push_back(detail::initial_formula_check(
      "initial-state function is i_{h*f}", comb,
      derived_initial_serial_star(f, initial_state_function(f),
                                  initial_state_function(h))));

  const ComputationFunction pi_comb =
      derived_computation_serial_star(f, h, pi_f, pi_h);
  {
    TheoremCheck c;
    c.claim = "every (rho, w) of pi_{h*f} replays into (h*f)(u)";
    for (const auto& [key, scheds] : pi_comb.entries) {
      const auto& u = key.second;
      for (const auto& paired : scheds) {
        const Signal z = solve(combfn, key.first, u, paired, max_events);
        if (comb.states(u).count(z)) continue;
        c.pass = false;
        c.witness = "(" + detail::describe_pair(key.first, u) +
                    ") with paired schedule [" + to_literal(paired) +
                    "] replays to [" + to_literal(z) +
                    "] outside (h*f)(u)";
        GeneratorFunction fc = combfn;
        ExplicitSystem cc = comb;
        BitVector mu = key.first;
        Signal uc = u;
        Schedule rc = paired;
        c.replay = [fc, cc, mu, uc, rc, max_events] {
          return cc.states(uc).count(solve(fc, mu, uc, rc, max_events)) == 0;
        };
        break;
      }
      if (!c.pass) break;
    }
    checks.push_back(std::move(c));
  }

  auto more = detail::computation_checks("computation function is pi_{h*f}",
                                         comb, combfn, pi_comb, max_events);
  for (auto& c : more) checks.push_back(std::move(c));
  return detail::finish_report(TheoremId::Serial, std::move(checks));
}

// Section 7: both operands share one generator function; the filtered
// computation function and the symmetry remark are checked by solving and
// comparing trajectories.
inline TheoremReport verify_intersection_theorem(
    const ExplicitSystem& f, const ExplicitSystem& g,
    const GeneratorFunction& fn, const ComputationFunction& pi_f,
    const ComputationFunction& pi_g, long max_events = 10000, int jobs = 1) {
  const ExplicitSystem comb = intersection(f, g);

  std::vector<TheoremCheck> checks;
  checks.push_back(detail::generation_check("f n g is generated by Y", comb,
                                            fn, max_events, jobs));
  checks.push_back(detail::initial_formula_check(
      "initial-state function equals i_f n i_g", comb,
      derived_initial_intersection(initial_state_function(f),
                                   initial_state_function(g),
                                   comb.domain())));

  const ComputationFunction pi_fg =
      derived_computation_intersection(f, g, fn, pi_f, pi_g, max_events);
  const ComputationFunction pi_gf =
      derived_computation_intersection(g, f, fn, pi_g, pi_f, max_events);

  {
    TheoremCheck c;
    c.claim = "symmetry: W_{f n g} = W_{g n f}";
    std::set<std::pair<BitVector, Signal>> wfg, wgf;
    for (const auto& [key, scheds] : pi_fg.entries) wfg.insert(key);
    for (const auto& [key, scheds] : pi_gf.entries) wgf.insert(key);
    c.pass = wfg == wgf;
    if (!c.pass) {
      c.witness = "the two filtered domains differ";
      ExplicitSystem fc = f, gc = g;
      c.replay = [fc, gc] {
        return !(computation_domain(intersection(fc, gc)) ==
                 computation_domain(intersection(gc, fc)));
      };
    }
    checks.push_back(std::move(c));
  }

  {
    TheoremCheck c;
    c.claim = "symmetry: trajectories of pi_{f n g} and pi_{g n f} match";
    auto matched_in = [&](const BitVector& mu, const Signal& u,
                          const Signal& traj, const ComputationFunction& other) {
      const auto it = other.entries.find({mu, u});
      if (it == other.entries.end()) return false;
      for (const auto& rhop : it->second)
        if (solve(fn, mu, u, rhop, max_events) == traj) return true;
      return false;
    };
    for (int direction = 0; direction < 2 && c.pass; ++direction) {
      const ComputationFunction& from = direction == 0 ? pi_fg : pi_gf;
      const ComputationFunction& to = direction == 0 ? pi_gf : pi_fg;
      for (const auto& [key, scheds] : from.entries) {
        for (const auto& rho : scheds) {
          const Signal traj = solve(fn, key.first, key.second, rho, max_events);
          if (matched_in(key.first, key.second, traj, to)) continue;
          c.pass = false;
          c.witness = "schedule [" + to_literal(rho) + "] at (" +
                      detail::describe_pair(key.first, key.second) +
                      ") unmatched in the mirrored computation function";
          GeneratorFunction fc = fn;
          ComputationFunction toc = to;
          BitVector mu = key.first;
          Signal u = key.second;
          Schedule rc = rho;
          c.replay = [fc, toc, mu, u, rc, max_events] {
            const Signal traj2 = solve(fc, mu, u, rc, max_events);
            const auto it = toc.entries.find({mu, u});
            if (it == toc.entries.end()) return true;
            for (const auto& rhop : it->second)
              if (solve(fc, mu, u, rhop, max_events) == traj2) return false;
            return true;
          };
          break;
        }
        if (!c.pass) break;
      }
    }
    checks.push_back(std::move(c));
  }

  auto more = detail::computation_checks("computation function is pi_{f n g}",
                                         comb, fn, pi_fg, max_events);
  for (auto& c : more) checks.push_back(std::move(c));
  return detail::finish_report(TheoremId::Intersection, std::move(checks));
}

// Section 8: the union lemma W_{f u g} = W_f u W_g plus generation and the
// three-case initial/computation formulas.
inline TheoremReport verify_union_theorem(
    const ExplicitSystem& f, const ExplicitSystem& g,
    const GeneratorFunction& fn, const ComputationFunction& pi_f,
    const ComputationFunction& pi_g, long max_events = 10000, int jobs = 1) {
  const ExplicitSystem comb = union_systems(f, g);

  std::vector<TheoremCheck> checks;
  {
    TheoremCheck c;
    c.claim = "lemma: W_{f u g} = W_f u W_g";
    auto wf = computation_domain(f);
    const auto wg = computation_domain(g);
    wf.insert(wg.begin(), wg.end());
    c.pass = computation_domain(comb) == wf;
    if (!c.pass) {
      c.witness = "computation domains differ";
      ExplicitSystem fc = f, gc = g;
      c.replay = [fc, gc] {
        auto w = computation_domain(fc);
        const auto w2 = computation_domain(gc);
        w.insert(w2.begin(), w2.end());
        return !(computation_domain(union_systems(fc, gc)) == w);
      };
    }
    checks.push_back(std::move(c));
  }

  checks.push_back(detail::generation_check("f u g is generated by Y", comb,
                                            fn, max_events, jobs));
  checks.push_back(detail::initial_formula_check(
      "initial-state function is i_{f u g}", comb,
      derived_initial_union(initial_state_function(f),
                            initial_state_function(g))));

  auto more = detail::computation_checks("computation function is pi_{f u g}",
                                         comb, fn,
                                         derived_computation_union(pi_f, pi_g),
                                         max_events);
  for (auto& c : more) checks.push_back(std::move(c));
  return detail::finish_report(TheoremId::Union, std::move(checks));
}

}  // namespace ars
