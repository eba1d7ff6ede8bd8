#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/signal.hpp"

using ars::BitVector;
using ars::Rational;
using ars::Signal;

namespace {

Signal make_bit(int init, std::vector<std::pair<Rational, int>> raw) {
  std::vector<Signal::Switch> sw;
  for (const auto& [t, v] : raw)
    sw.emplace_back(t, BitVector(1, static_cast<std::uint64_t>(v)));
  return Signal(BitVector(1, static_cast<std::uint64_t>(init)), sw);
}

Signal random_signal(std::mt19937& rng, int width, int max_switches) {
  std::uniform_int_distribution<int> nsw(0, max_switches);
  std::uniform_int_distribution<int> num(-4, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<std::uint64_t> val(
      0, (std::uint64_t{1} << width) - 1);
  std::set<Rational> times;
  const int k = nsw(rng);
  while (static_cast<int>(times.size()) < k)
    times.insert(Rational(num(rng), den(rng)));
  std::vector<Signal::Switch> raw;
  for (const auto& t : times) raw.emplace_back(t, BitVector(width, val(rng)));
  return Signal(BitVector(width, val(rng)), raw);
}

}  // namespace

TEST_CASE("bitvector basics") {
  const BitVector v = BitVector::parse("0101");
  CHECK(v.width() == 4);
  CHECK(v.to_index() == 5);
  CHECK_FALSE(v.bit(1));
  CHECK(v.bit(2));
  CHECK(v.to_string() == "0101");
  CHECK((~v).to_string() == "1010");
  CHECK(v.with_bit(1, true).to_string() == "1101");
  CHECK(v.count() == 2);
  CHECK_THROWS_AS(v.bit(5), ars::BadRange);
  CHECK_THROWS_AS(v & BitVector::zeros(3), ars::WidthMismatch);
}

TEST_CASE("bitvector concat and slice are inverse") {
  const BitVector a = BitVector::parse("10");
  const BitVector b = BitVector::parse("011");
  const BitVector c = a.concat(b);
  CHECK(c.to_string() == "10011");
  CHECK(c.slice(1, 2) == a);
  CHECK(c.slice(3, 5) == b);
  CHECK_THROWS_AS(c.slice(0, 2), ars::BadRange);
  CHECK_THROWS_AS(c.slice(3, 6), ars::BadRange);
}

TEST_CASE("value_at follows the half-open interval convention") {
  const Signal x = make_bit(0, {{Rational(1), 1}});
  CHECK(x.value_at(Rational(1, 2)) == BitVector(1, 0));
  // The switch value holds on the closed-left interval [t0, t1).
  CHECK(x.value_at(Rational(1)) == BitVector(1, 1));
  CHECK(x.value_at(Rational(100)) == BitVector(1, 1));
}

TEST_CASE("left limit") {
  const Signal x = make_bit(0, {{Rational(1), 1}});
  CHECK(x.left_limit(Rational(1)) == BitVector(1, 0));
  CHECK(x.left_limit(Rational(3, 2)) == BitVector(1, 1));

  const Signal c(BitVector::parse("10"));
  CHECK(c.left_limit(Rational(-5)) == BitVector::parse("10"));
  CHECK(c.left_limit(Rational(5)) == BitVector::parse("10"));
}

TEST_CASE("initial and final values") {
  const Signal x = make_bit(0, {{Rational(1), 1}});
  CHECK(x.initial_value() == BitVector(1, 0));
  CHECK(x.final_value() == BitVector(1, 1));

  const Signal c(BitVector::parse("10"));
  CHECK(c.initial_value() == c.final_value());

  const Signal y = make_bit(0, {{Rational(1), 1}, {Rational(2), 0}});
  CHECK(y.final_value() == BitVector(1, 0));
}

TEST_CASE("canonicalization drops no-op switches") {
  const Signal a = make_bit(0, {{Rational(1), 0}, {Rational(2), 1}});
  REQUIRE(a.switches().size() == 1);
  CHECK(a.switches()[0].first == Rational(2));

  const Signal b = make_bit(0, {{Rational(1), 1}, {Rational(2), 1}});
  REQUIRE(b.switches().size() == 1);
  CHECK(b.switches()[0].first == Rational(1));

  CHECK_THROWS_AS(make_bit(0, {{Rational(2), 1}, {Rational(1), 0}}),
                  ars::NonIncreasingTimes);
}

TEST_CASE("canonicalization preserves value_at and is idempotent") {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Signal x = random_signal(rng, 2, 5);
    const Signal again(x.initial_value(), x.switches());
    CHECK(again == x);
    for (int i = -10; i <= 28; ++i) {
      const Rational t(i, 2);
      CHECK(again.value_at(t) == x.value_at(t));
    }
  }
}

TEST_CASE("pairing concatenates pointwise") {
  const Signal x(BitVector(1, 0));
  const Signal u(BitVector(1, 1));
  const Signal xu = ars::pair_signals(x, u);
  CHECK(xu == Signal(BitVector::parse("01")));

  // Merged grid: switches at 1 and 2 interleave.
  const Signal a = make_bit(0, {{Rational(1), 1}});
  const Signal b = make_bit(0, {{Rational(2), 1}});
  const Signal ab = ars::pair_signals(a, b);
  CHECK(ab.initial_value() == BitVector::parse("00"));
  REQUIRE(ab.switches().size() == 2);
  CHECK(ab.switches()[0] ==
        Signal::Switch{Rational(1), BitVector::parse("10")});
  CHECK(ab.switches()[1] ==
        Signal::Switch{Rational(2), BitVector::parse("11")});
}

TEST_CASE("pair and project are mutually inverse") {
  std::mt19937 rng(17);
  for (int k = 0; k < 100; ++k) {
    const Signal x = random_signal(rng, 2, 4);
    const Signal u = random_signal(rng, 1, 4);
    const Signal z = ars::pair_signals(x, u);
    CHECK(z.project(1, 2) == x);
    CHECK(z.project(3, 3) == u);
    CHECK(z.initial_value() == x.initial_value().concat(u.initial_value()));
    // Pointwise agreement on the merged grid.
    for (int i = -8; i <= 26; ++i) {
      const Rational t(i, 2);
      CHECK(z.value_at(t) == x.value_at(t).concat(u.value_at(t)));
      CHECK(z.left_limit(t) == x.left_limit(t).concat(u.left_limit(t)));
    }
  }
  CHECK_THROWS_AS(random_signal(rng, 2, 2).project(0, 1), ars::BadRange);
}

TEST_CASE("complement is an involution and commutes with pair") {
  const Signal zero(BitVector(1, 0));
  CHECK(ars::complement(zero) == Signal(BitVector(1, 1)));

  const Signal x = make_bit(0, {{Rational(1), 1}});
  const Signal cx = ars::complement(x);
  CHECK(cx.initial_value() == BitVector(1, 1));
  REQUIRE(cx.switches().size() == 1);
  CHECK(cx.switches()[0].second == BitVector(1, 0));

  std::mt19937 rng(23);
  for (int k = 0; k < 100; ++k) {
    const Signal a = random_signal(rng, 2, 4);
    const Signal b = random_signal(rng, 2, 4);
    CHECK(ars::complement(ars::complement(a)) == a);
    CHECK(ars::complement(ars::pair_signals(a, b)) ==
          ars::pair_signals(ars::complement(a), ars::complement(b)));
  }
}

TEST_CASE("left limit equals value_at just before, sampled below the min gap") {
  std::mt19937 rng(29);
  for (int k = 0; k < 100; ++k) {
    const Signal x = random_signal(rng, 2, 5);
    Rational gap(1);
    const auto& sw = x.switches();
    for (std::size_t i = 1; i < sw.size(); ++i)
      gap = std::min(gap, sw[i].first - sw[i - 1].first);
    const Rational eps = gap / Rational(3);
    for (const auto& [t, v] : sw) {
      CHECK(x.left_limit(t) == x.value_at(t - eps));
      // Right continuity at the switch itself.
      CHECK(x.value_at(t) == v);
    }
  }
}

TEST_CASE("width mismatches are rejected") {
  CHECK_THROWS_AS(
      Signal(BitVector(1, 0), {{Rational(1), BitVector::parse("01")}}),
      ars::WidthMismatch);
}
