#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/errors.hpp"
#include "ars/rational.hpp"

namespace ars {

// One fire instant: `fires` is the set of coordinates updated at `time`
// (the value rho(t_k) of the underlying pulse function). In a tail pattern
// `time` is an offset into the period.
struct ScheduleEvent {
  Rational time;
  BitVector fires;

  friend auto operator<=>(const ScheduleEvent&, const ScheduleEvent&) = default;
};

// An update schedule: a finite prefix of fire events followed by a pattern
// repeated forever with period `tail_period` from `tail_anchor`. The induced
// fire-time sequence is strictly increasing and unbounded, which is the
// finite encoding of the progressive functions rho in P_n.
class Schedule {
public:
  Schedule(int width, std::vector<ScheduleEvent> prefix, Rational tail_anchor,
           Rational tail_period, std::vector<ScheduleEvent> tail_pattern)
      : width_(width),
        prefix_(std::move(prefix)),
        tail_anchor_(std::move(tail_anchor)),
        tail_period_(std::move(tail_period)),
        tail_pattern_(std::move(tail_pattern)) {
    if (width_ < 1) throw InvalidSchedule("schedule width must be positive");
    if (!(Rational(0) < tail_period_))
      throw InvalidSchedule("tail period must be positive");
    if (tail_pattern_.empty())
      throw InvalidSchedule("tail pattern must be nonempty");
    check_events(prefix_, "prefix");
    check_events(tail_pattern_, "tail pattern");
    for (const auto& e : tail_pattern_)
      if (e.time < Rational(0) || !(e.time < tail_period_))
        throw InvalidSchedule("tail offset " + e.time.to_string() +
                              " outside [0, period)");
    if (!prefix_.empty() && !(prefix_.back().time < tail_anchor_))
      throw InvalidSchedule("tail anchor must lie after the last prefix event");
  }

  int width() const { return width_; }
  const std::vector<ScheduleEvent>& prefix() const { return prefix_; }
  const Rational& tail_anchor() const { return tail_anchor_; }
  const Rational& tail_period() const { return tail_period_; }
  const std::vector<ScheduleEvent>& tail_pattern() const { return tail_pattern_; }

  // Every coordinate must fire infinitely often, i.e. appear somewhere in
  // the repeated tail.
  bool is_progressive() const {
    BitVector covered = BitVector::zeros(width_);
    for (const auto& e : tail_pattern_) covered = covered | e.fires;
    return covered == BitVector::ones(width_);
  }

  // All fire events with time <= T, in increasing time order.
  std::vector<ScheduleEvent> events_up_to(const Rational& T) const {
    std::vector<ScheduleEvent> out;
    for (const auto& e : prefix_) {
      if (T < e.time) return out;
      out.push_back(e);
    }
    for (Rational base = tail_anchor_;; base += tail_period_) {
      if (T < base + tail_pattern_.front().time) break;
      for (const auto& e : tail_pattern_) {
        const Rational t = base + e.time;
        if (T < t) break;
        out.push_back({t, e.fires});
      }
    }
    return out;
  }

  friend auto operator<=>(const Schedule&, const Schedule&) = default;

private:
  void check_events(const std::vector<ScheduleEvent>& events,
                    const char* what) const {
    for (std::size_t k = 0; k < events.size(); ++k) {
      if (events[k].fires.width() != width_)
        throw InvalidSchedule(std::string(what) +
                              " fire set width differs from schedule width");
      if (events[k].fires.none())
        throw InvalidSchedule(std::string(what) + " fire set is empty at t=" +
                              events[k].time.to_string());
      if (k > 0 && !(events[k - 1].time < events[k].time))
        throw InvalidSchedule(std::string(what) +
                              " times not strictly increasing");
    }
  }

  int width_;
  std::vector<ScheduleEvent> prefix_;
  Rational tail_anchor_;
  Rational tail_period_;
  std::vector<ScheduleEvent> tail_pattern_;
};

namespace detail {

// Events of `s` strictly before T, tail included, with fire sets padded to
// a combined width: r-coordinates stay in place, s-coordinates shift by
// `shift`.
inline void collect_padded_events(const Schedule& s, const Rational& T,
                                  int left_pad, int right_pad,
                                  std::vector<ScheduleEvent>& out) {
  auto pad = [&](const BitVector& fires) {
    BitVector v = fires;
    if (left_pad > 0) v = BitVector::zeros(left_pad).concat(v);
    if (right_pad > 0) v = v.concat(BitVector::zeros(right_pad));
    return v;
  };
  for (const auto& e : s.prefix()) {
    if (!(e.time < T)) return;
    out.push_back({e.time, pad(e.fires)});
  }
  for (Rational base = s.tail_anchor();; base += s.tail_period()) {
    if (!(base + s.tail_pattern().front().time < T)) break;
    for (const auto& e : s.tail_pattern()) {
      const Rational t = base + e.time;
      if (!(t < T)) break;
      out.push_back({t, pad(e.fires)});
    }
  }
}

inline std::vector<ScheduleEvent> merge_events(std::vector<ScheduleEvent> a,
                                               std::vector<ScheduleEvent> b) {
  std::vector<ScheduleEvent> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].time < b[j].time)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].time < a[i].time) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].time, a[i].fires | b[j].fires});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

// Fire set as a coordinate list: "{1,3}".
inline std::string to_fireset_string(const BitVector& fires) {
  std::string out = "{";
  bool first = true;
  for (int i = 1; i <= fires.width(); ++i) {
    if (!fires.bit(i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// DSL literal body:
// "n=2 prefix[1:{1}; 2:{1,2}] tail anchor=3 period=1 [0:{1}; 1/2:{2}]".
inline std::string to_literal(const Schedule& r) {
  std::string out = "n=" + std::to_string(r.width()) + " prefix[";
  bool first = true;
  for (const auto& e : r.prefix()) {
    if (!first) out += "; ";
    out += e.time.to_string() + ":" + to_fireset_string(e.fires);
    first = false;
  }
  out += "] tail anchor=" + r.tail_anchor().to_string() +
         " period=" + r.tail_period().to_string() + " [";
  first = true;
  for (const auto& e : r.tail_pattern()) {
    if (!first) out += "; ";
    out += e.time.to_string() + ":" + to_fireset_string(e.fires);
    first = false;
  }
  return out + "]";
}

// The pairing (rho, rho') in P_{n+n'}: fire times are the union of both
// event sets, fire sets are unioned at common times with the second
// schedule's coordinates shifted up. Times are compared as absolute
// rationals; no re-anchoring is performed.
inline Schedule pair_schedules(const Schedule& r, const Schedule& s) {
  if (!r.is_progressive() || !s.is_progressive())
    throw NotProgressive("pair_schedules requires progressive operands");
  const int n = r.width(), np = s.width();

  const Rational anchor = std::max(r.tail_anchor(), s.tail_anchor());
  const Rational period = Rational::lcm(r.tail_period(), s.tail_period());

  std::vector<ScheduleEvent> ra, sa;
  detail::collect_padded_events(r, anchor, 0, np, ra);
  detail::collect_padded_events(s, anchor, n, 0, sa);
  std::vector<ScheduleEvent> prefix =
      detail::merge_events(std::move(ra), std::move(sa));

  // One combined period [anchor, anchor + period) of both tails.
  std::vector<ScheduleEvent> rp, sp;
  detail::collect_padded_events(r, anchor + period, 0, np, rp);
  detail::collect_padded_events(s, anchor + period, n, 0, sp);
  auto tail_of = [&](std::vector<ScheduleEvent>& events) {
    std::vector<ScheduleEvent> tail;
    for (auto& e : events)
      if (!(e.time < anchor)) tail.push_back({e.time - anchor, e.fires});
    return tail;
  };
  std::vector<ScheduleEvent> pattern =
      detail::merge_events(tail_of(rp), tail_of(sp));

  return Schedule(n + np, std::move(prefix), anchor, period,
                  std::move(pattern));
}

}  // namespace ars
