#pragma once

// Straight-line reference for the asynchronous evolution equation, kept
// independent of the library's event-driven solver: it materializes the
// whole merged event list up to a horizon past which stabilization is
// decided by exhaustion of the boundary-state space, applies the update
// rule row by row, and reads input left limits by linear scan.

#include <optional>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/genfn.hpp"
#include "ars/rational.hpp"
#include "ars/schedule.hpp"
#include "ars/signal.hpp"

namespace refimpl {

using ars::BitVector;
using ars::GeneratorFunction;
using ars::Rational;
using ars::Schedule;
using ars::Signal;

inline BitVector input_left_limit(const Signal& u, const Rational& t) {
  BitVector v = u.initial_value();
  for (const auto& [time, value] : u.switches()) {
    if (!(time < t)) break;
    v = value;
  }
  return v;
}

// Returns the stabilized signal, or nothing when the run oscillates.
inline std::optional<Signal> reference_solve(const GeneratorFunction& f,
                                             const BitVector& mu,
                                             const Signal& u,
                                             const Schedule& r) {
  const int n = f.state_width();

  // First tail-period boundary strictly past the input's last switch.
  Rational b0 = r.tail_anchor();
  if (const auto last = u.last_switch_time()) {
    while (!(*last < b0)) b0 += r.tail_period();
  }
  const long horizon_periods = (1L << n) + 2;
  const Rational t_end =
      b0 + r.tail_period() * Rational(horizon_periods);

  // Unroll every event before t_end directly from the schedule fields.
  std::vector<ars::ScheduleEvent> events;
  for (const auto& e : r.prefix())
    if (e.time < t_end) events.push_back(e);
  for (Rational base = r.tail_anchor(); base < t_end;
       base += r.tail_period())
    for (const auto& e : r.tail_pattern()) {
      const Rational t = base + e.time;
      if (t < t_end) events.push_back({t, e.fires});
    }

  BitVector state = mu;
  std::vector<Signal::Switch> switches;
  for (const auto& e : events) {
    const BitVector input = input_left_limit(u, e.time);
    const BitVector target = f.eval(state, input);
    BitVector next = state;
    for (int i = 1; i <= n; ++i)
      if (e.fires.bit(i)) next = next.with_bit(i, target.bit(i));
    if (next != state) switches.emplace_back(e.time, next);
    state = next;
  }

  // Stabilized iff from some period boundary in [b0, t_end) onward no
  // switch was recorded at all (at least one full simulated period is then
  // quiet). Otherwise every simulated period past b0 saw activity and the
  // run oscillates.
  for (long k = 0; k + 1 <= horizon_periods; ++k) {
    const Rational lo = b0 + r.tail_period() * Rational(k);
    bool quiet_from_here = true;
    for (const auto& [t, v] : switches)
      if (!(t < lo)) quiet_from_here = false;
    if (quiet_from_here) return Signal(mu, switches);
  }
  return std::nullopt;
}

}  // namespace refimpl
