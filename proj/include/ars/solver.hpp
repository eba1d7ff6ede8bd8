#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/errors.hpp"
#include "ars/genfn.hpp"
#include "ars/rational.hpp"
#include "ars/schedule.hpp"
#include "ars/signal.hpp"

namespace ars {

// Diagnoses a run that never becomes constant: `cycle` lists the states
// visited over one tail period starting at `entry_time`. A proven periodic
// attractor always carries at least two distinct states; a run aborted by
// the event budget before reaching the periodic regime may degenerate to a
// shorter history.
struct OscillationReport {
  Rational entry_time;
  std::vector<BitVector> cycle;
};

class NonStabilizing : public Error {
public:
  NonStabilizing(OscillationReport report, const std::string& what)
      : Error(what), report_(std::move(report)) {}

  const OscillationReport& report() const { return report_; }

private:
  OscillationReport report_;
};

namespace detail {

// Walks schedule events in time order without materializing the tail.
class EventCursor {
public:
  explicit EventCursor(const Schedule& r) : sched_(&r) {}

  ScheduleEvent next() {
    if (prefix_pos_ < sched_->prefix().size())
      return sched_->prefix()[prefix_pos_++];
    const auto& pat = sched_->tail_pattern();
    ScheduleEvent e = pat[pattern_pos_];
    e.time += period_start();
    if (++pattern_pos_ == pat.size()) {
      pattern_pos_ = 0;
      ++period_;
    }
    return e;
  }

  bool at_period_start() const {
    return prefix_pos_ >= sched_->prefix().size() && pattern_pos_ == 0;
  }
  std::int64_t period_index() const { return period_; }

  Rational period_start() const {
    return sched_->tail_anchor() + sched_->tail_period() * Rational(period_);
  }

  // Only meaningful while at a period boundary; jumps forward in the tail.
  void skip_to_period(std::int64_t j) { period_ = j; }

private:
  const Schedule* sched_;
  std::size_t prefix_pos_ = 0;
  std::size_t pattern_pos_ = 0;
  std::int64_t period_ = 0;
};

inline BitVector apply_update(const GeneratorFunction& f, const BitVector& state,
                              const BitVector& input, const BitVector& fires) {
  return (state & ~fires) | (f.eval(state, input) & fires);
}

inline std::optional<Rational> next_input_switch_at_or_after(const Signal& u,
                                                             const Rational& t) {
  for (const auto& [time, value] : u.switches())
    if (!(time < t)) return time;
  return std::nullopt;
}

inline bool input_switch_in(const Signal& u, const Rational& lo,
                            const Rational& hi) {
  for (const auto& [time, value] : u.switches())
    if (!(time < lo) && time < hi) return true;
  return false;
}

}  // namespace detail

// The solution Y^{-rho}(t, mu, u) of the asynchronous evolution equation:
// the state starts at mu; at each fire time t the fired coordinates take
// Y_i(x(t-0), u(t-0)) while the rest keep x_i(t-0). Both reads are left
// limits, so an input switch at a fire time is not yet visible there.
//
// Stabilization: once the input is past its last switch, a full tail
// period with no state change means the run is constant from then on
// (finite state, periodic fire pattern). A recurring boundary state with
// activity in between is a periodic attractor and raises NonStabilizing.
// Quiet stretches between distant input switches are skipped, so the event
// budget is spent on actual activity.
inline Signal solve(const GeneratorFunction& f, const BitVector& mu,
                    const Signal& u, const Schedule& r,
                    long max_events = 10000) {
  const int n = f.state_width();
  if (mu.width() != n)
    throw WidthMismatch("initial state width differs from state width");
  if (r.width() != n)
    throw WidthMismatch("schedule width differs from state width");
  if (u.width() != f.input_width())
    throw WidthMismatch("input signal width differs from input width");
  if (!r.is_progressive())
    throw NotProgressive("solve requires a progressive schedule");

  const std::optional<Rational> last_u = u.last_switch_time();
  const Rational& period = r.tail_period();

  detail::EventCursor cursor(r);
  BitVector state = mu;
  std::vector<Signal::Switch> switches;
  long events = 0;
  Rational last_event_time = r.tail_anchor();

  // Boundary bookkeeping once the input has gone constant.
  std::map<BitVector, Rational> boundary_seen;
  bool in_regime = false;
  Rational prev_boundary;

  while (true) {
    if (cursor.at_period_start()) {
      const Rational start = cursor.period_start();
      const bool changed_last_period =
          !switches.empty() && !(switches.back().first < prev_boundary);

      if (in_regime && !changed_last_period) return Signal(mu, switches);

      if (!last_u || *last_u < start) {
        in_regime = true;
        auto [it, inserted] = boundary_seen.emplace(state, start);
        if (!inserted) {
          // This boundary state was seen before and every period since has
          // had activity: the stretch replays forever. Witness one period.
          OscillationReport rep;
          rep.entry_time = it->second;
          rep.cycle.push_back(state);
          detail::EventCursor probe = cursor;
          BitVector s = state;
          const Rational end = start + period;
          while (true) {
            const ScheduleEvent e = probe.next();
            if (!(e.time < end)) break;
            const BitVector next =
                detail::apply_update(f, s, u.left_limit(e.time), e.fires);
            if (next != s) rep.cycle.push_back(next);
            s = next;
          }
          const std::string msg =
              "run oscillates from t=" + rep.entry_time.to_string() + " (" +
              std::to_string(rep.cycle.size()) + " states per period)";
          throw NonStabilizing(std::move(rep), msg);
        }
      } else {
        // Input still switches at or after `start`.
        in_regime = false;
        boundary_seen.clear();
        const bool prev_quiet =
            cursor.period_index() > 0 &&
            (switches.empty() || switches.back().first < start - period) &&
            !detail::input_switch_in(u, start - period, start);
        if (prev_quiet) {
          const auto next_switch =
              detail::next_input_switch_at_or_after(u, start);
          if (next_switch && !(*next_switch < start + period)) {
            // Frozen until the next input switch; resume at the last
            // boundary not beyond it.
            const std::int64_t target =
                ((*next_switch - r.tail_anchor()) / period).floor();
            if (target > cursor.period_index()) {
              cursor.skip_to_period(target);
              prev_boundary = cursor.period_start();
              continue;
            }
          }
        }
      }
      prev_boundary = start;
    }

    const ScheduleEvent e = cursor.next();
    if (++events > max_events) {
      OscillationReport rep;
      rep.entry_time = last_event_time;
      const std::size_t window = r.tail_pattern().size() + 1;
      const std::size_t take = std::min(window, switches.size());
      if (take == switches.size())
        rep.cycle.push_back(mu);
      else
        rep.cycle.push_back(switches[switches.size() - take - 1].second);
      for (std::size_t k = switches.size() - take; k < switches.size(); ++k)
        rep.cycle.push_back(switches[k].second);
      throw NonStabilizing(std::move(rep),
                           "no stabilization within " +
                               std::to_string(max_events) + " events");
    }
    const BitVector next =
        detail::apply_update(f, state, u.left_limit(e.time), e.fires);
    last_event_time = e.time;
    if (next != state) {
      switches.emplace_back(e.time, next);
      state = next;
    }
  }
}

// Outcome of the membership decision for x in Sigma_Y^-(u). A positive
// answer carries a progressive witness schedule that replays to x; a
// negative one carries the first conflict found.
struct MembershipResult {
  bool member = false;
  std::optional<Schedule> witness;
  std::optional<std::string> conflict;
};

// Decides whether some progressive schedule produces x from its own
// initial value under input u. Necessary and sufficient:
//   (a) every coordinate that changes at a switch of x matches the
//       generator on the left limits there, and
//   (b) the final value of x is a fixed point of Y under the final input
//       (a progressive schedule eventually fires every coordinate).
// The witness fires exactly the changed coordinates at each switch time
// and all coordinates periodically after the last switch of x and u.
inline MembershipResult membership(const GeneratorFunction& f, const Signal& x,
                                   const Signal& u) {
  const int n = f.state_width();
  if (x.width() != n)
    throw WidthMismatch("state signal width differs from state width");
  if (u.width() != f.input_width())
    throw WidthMismatch("input signal width differs from input width");

  MembershipResult result;
  for (const auto& [t, value] : x.switches()) {
    const BitVector& before = x.left_limit(t);
    const BitVector& target = f.eval(before, u.left_limit(t));
    for (int i = 1; i <= n; ++i) {
      if (value.bit(i) == before.bit(i)) continue;
      if (target.bit(i) != value.bit(i)) {
        result.conflict = "at t=" + t.to_string() + " coordinate " +
                          std::to_string(i) + ": state switches to " +
                          std::string(value.bit(i) ? "1" : "0") +
                          " but the generator yields " +
                          std::string(target.bit(i) ? "1" : "0");
        return result;
      }
    }
  }

  const BitVector& fin = x.final_value();
  if (f.eval(fin, u.final_value()) != fin) {
    result.conflict = "final value not a fixed point";
    return result;
  }

  std::vector<ScheduleEvent> prefix;
  for (const auto& [t, value] : x.switches())
    prefix.push_back({t, value ^ x.left_limit(t)});
  Rational anchor(1);
  if (const auto lx = x.last_switch_time()) anchor = std::max(anchor, *lx + 1);
  if (const auto lu = u.last_switch_time()) anchor = std::max(anchor, *lu + 1);
  result.member = true;
  result.witness = Schedule(n, std::move(prefix), anchor, Rational(1),
                            {{Rational(0), BitVector::ones(n)}});
  return result;
}

}  // namespace ars
