#pragma once

// Seeded random instance generation shared by the unit tests and the
// acceptance suite.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/genfn.hpp"
#include "ars/rational.hpp"
#include "ars/schedule.hpp"
#include "ars/signal.hpp"
#include "ars/solver.hpp"
#include "ars/systems.hpp"

namespace gen {

using ars::BitVector;
using ars::GeneratorFunction;
using ars::Rational;
using ars::Schedule;
using ars::ScheduleEvent;
using ars::Signal;

inline BitVector random_bits(std::mt19937_64& rng, int width) {
  std::uniform_int_distribution<std::uint64_t> val(
      0, (std::uint64_t{1} << width) - 1);
  return BitVector(width, val(rng));
}

inline BitVector random_nonempty_fireset(std::mt19937_64& rng, int width) {
  std::uniform_int_distribution<std::uint64_t> val(
      1, (std::uint64_t{1} << width) - 1);
  return BitVector(width, val(rng));
}

inline GeneratorFunction random_genfn(std::mt19937_64& rng, int n, int m) {
  std::vector<BitVector> table;
  table.reserve(std::size_t{1} << (n + m));
  for (std::size_t i = 0; i < (std::size_t{1} << (n + m)); ++i)
    table.push_back(random_bits(rng, n));
  return GeneratorFunction(n, m, std::move(table));
}

inline Rational random_time(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 16);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Signal random_signal(std::mt19937_64& rng, int width, int max_switches) {
  std::uniform_int_distribution<int> nsw(0, max_switches);
  std::set<Rational> times;
  const int k = nsw(rng);
  while (static_cast<int>(times.size()) < k) times.insert(random_time(rng));
  std::vector<Signal::Switch> raw;
  for (const auto& t : times) raw.emplace_back(t, random_bits(rng, width));
  return Signal(random_bits(rng, width), raw);
}

inline Schedule random_schedule(std::mt19937_64& rng, int width,
                                int max_prefix_events) {
  std::uniform_int_distribution<int> npre(0, max_prefix_events);
  std::set<Rational> times;
  const int k = npre(rng);
  while (static_cast<int>(times.size()) < k) times.insert(random_time(rng));
  std::vector<ScheduleEvent> prefix;
  for (const auto& t : times)
    prefix.push_back({t, random_nonempty_fireset(rng, width)});

  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> pnum(1, 2);
  const Rational anchor =
      (prefix.empty() ? Rational(0) : prefix.back().time) + Rational(1, den(rng));
  const Rational period(pnum(rng), den(rng));

  std::uniform_int_distribution<int> npat(1, 3);
  std::set<Rational> offsets;
  offsets.insert(Rational(0));
  const int kp = npat(rng);
  while (static_cast<int>(offsets.size()) < kp) {
    const Rational o = random_time(rng) * period / Rational(17);
    if (Rational(0) < o && o < period) offsets.insert(o);
  }
  std::vector<ScheduleEvent> pattern;
  for (const auto& o : offsets)
    pattern.push_back({o, random_nonempty_fireset(rng, width)});
  // Make sure every coordinate appears somewhere in the tail.
  BitVector covered = BitVector::zeros(width);
  for (const auto& e : pattern) covered = covered | e.fires;
  pattern.back().fires = pattern.back().fires | ~covered;
  return Schedule(width, std::move(prefix), anchor, period, std::move(pattern));
}

// One random solver instance.
struct Instance {
  GeneratorFunction fn;
  BitVector mu;
  Signal input;
  Schedule sched;
};

inline Instance random_instance(std::mt19937_64& rng, int max_n = 3,
                                int max_m = 2, int max_prefix = 6,
                                int max_input_switches = 4) {
  std::uniform_int_distribution<int> nd(1, max_n), md(1, max_m);
  const int n = nd(rng), m = md(rng);
  return Instance{random_genfn(rng, n, m), random_bits(rng, n),
                  random_signal(rng, m, max_input_switches),
                  random_schedule(rng, n, max_prefix)};
}

// Builds a system that is regular by construction: states are produced by
// solving the generator function on sampled initial values and schedules.
// Returns nothing if sampling keeps hitting oscillating runs.
inline std::optional<ars::ExplicitSystem> random_generated_system(
    std::mt19937_64& rng, const GeneratorFunction& fn, int num_inputs,
    int states_per_input, int max_input_switches = 2) {
  ars::ExplicitSystem::EntryMap entries;
  int failures = 0;
  while (static_cast<int>(entries.size()) < num_inputs) {
    const Signal u = random_signal(rng, fn.input_width(), max_input_switches);
    if (entries.count(u)) continue;
    std::set<Signal> states;
    while (static_cast<int>(states.size()) < states_per_input) {
      try {
        states.insert(solve(fn, random_bits(rng, fn.state_width()), u,
                            random_schedule(rng, fn.state_width(), 3)));
      } catch (const ars::NonStabilizing&) {
        if (++failures > 200) return std::nullopt;
      }
    }
    entries.emplace(u, std::move(states));
  }
  return ars::ExplicitSystem(fn.input_width(), fn.state_width(),
                             std::move(entries));
}

}  // namespace gen
