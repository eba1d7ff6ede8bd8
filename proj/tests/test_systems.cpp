#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "ars/dsl.hpp"
#include "ars/systems.hpp"
#include "generators.hpp"

using ars::BitVector;
using ars::ComputationFunction;
using ars::ExplicitSystem;
using ars::Rational;
using ars::Signal;

namespace {

Signal constant(const char* bits) { return Signal(BitVector::parse(bits)); }

ExplicitSystem make_system(
    int m, int n,
    std::vector<std::pair<Signal, std::vector<Signal>>> entries) {
  ExplicitSystem::EntryMap map;
  for (auto& [u, states] : entries) {
    auto& set = map[u];
    for (auto& x : states) set.insert(x);
  }
  return ExplicitSystem(m, n, std::move(map));
}

ExplicitSystem random_system(std::mt19937_64& rng, int m, int n, int inputs,
                             int max_states) {
  std::uniform_int_distribution<int> ns(1, max_states);
  ExplicitSystem::EntryMap map;
  while (static_cast<int>(map.size()) < inputs) {
    const Signal u = gen::random_signal(rng, m, 2);
    auto& set = map[u];
    const int k = ns(rng);
    while (static_cast<int>(set.size()) < k)
      set.insert(gen::random_signal(rng, n, 2));
  }
  return ExplicitSystem(m, n, std::move(map));
}

}  // namespace

TEST_CASE("initial state function") {
  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {constant("0"), constant("1")}}});
  const auto i = initial_state_function(f);
  CHECK(i.entries.at(constant("0")) ==
        std::set<BitVector>{BitVector(1, 0), BitVector(1, 1)});

  const Signal rise(BitVector(1, 0), {{Rational(1), BitVector(1, 1)}});
  const ExplicitSystem g =
      make_system(1, 1, {{constant("1"), {constant("0"), rise}}});
  CHECK(initial_state_function(g).entries.at(constant("1")) ==
        std::set<BitVector>{BitVector(1, 0)});

  for (const auto& [u, states] : f.entries())
    CHECK(initial_state_function(f).entries.at(u).size() <= states.size());
}

TEST_CASE("subsystem relation") {
  const ExplicitSystem g =
      make_system(1, 1, {{constant("0"), {constant("0"), constant("1")}},
                         {constant("1"), {constant("1")}}});
  CHECK(is_subsystem(g, g));

  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {constant("1")}}});
  CHECK(is_subsystem(f, g));
  CHECK_FALSE(is_subsystem(g, f));

  const ExplicitSystem h =
      make_system(1, 1, {{constant("1"), {constant("0")}}});
  CHECK_FALSE(is_subsystem(h, g));  // value not inherited
  CHECK_THROWS_AS(is_subsystem(f, make_system(2, 1, {{constant("00"),
                                                      {constant("0")}}})),
                  ars::WidthMismatch);
}

TEST_CASE("subsystem transitivity on random triples") {
  std::mt19937_64 rng(7);
  int chained = 0;
  for (int k = 0; k < 40; ++k) {
    const ExplicitSystem h = random_system(rng, 1, 1, 3, 3);
    // Restrict twice to get a guaranteed chain.
    ExplicitSystem::EntryMap gmap, fmap;
    for (const auto& [u, states] : h.entries()) {
      std::set<Signal> gset(states.begin(), states.end());
      if (gset.size() > 1) gset.erase(*gset.rbegin());
      gmap.emplace(u, gset);
    }
    const ExplicitSystem g(1, 1, gmap);
    auto it = g.entries().begin();
    fmap.emplace(it->first, it->second);
    const ExplicitSystem f(1, 1, fmap);
    CHECK(is_subsystem(f, g));
    CHECK(is_subsystem(g, h));
    CHECK(is_subsystem(f, h));
    ++chained;
  }
  CHECK(chained == 40);
}

TEST_CASE("dual system") {
  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {constant("0")}}});
  const ExplicitSystem fstar = dual_system(f);
  CHECK(fstar.entries().at(constant("1")) == std::set<Signal>{constant("1")});
  CHECK(dual_system(fstar) == f);

  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const ExplicitSystem a = random_system(rng, 1, 2, 2, 3);
    const ExplicitSystem astar = dual_system(a);
    CHECK(dual_system(astar) == a);
    for (const auto& [u, states] : a.entries())
      CHECK(astar.entries().at(ars::complement(u)).size() == states.size());
  }
}

TEST_CASE("cartesian product") {
  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {constant("0"), constant("1")}}});
  const ExplicitSystem fp =
      make_system(1, 1, {{constant("1"), {constant("0"), constant("1")}},
                         {constant("0"), {constant("1")}}});
  const ExplicitSystem prod = cartesian_product(f, fp);
  CHECK(prod.input_width() == 2);
  CHECK(prod.state_width() == 2);
  for (const auto& [u, xs] : f.entries())
    for (const auto& [up, xps] : fp.entries())
      CHECK(prod.entries().at(ars::pair_signals(u, up)).size() ==
            xs.size() * xps.size());

  // i_{f x f'} = i_f x i_{f'} by enumeration.
  const auto formula = derived_initial_product(initial_state_function(f),
                                               initial_state_function(fp));
  CHECK(formula == initial_state_function(prod));
}

TEST_CASE("parallel connection") {
  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {constant("0")}},
                         {constant("1"), {constant("1")}}});
  const ExplicitSystem fp =
      make_system(1, 1, {{constant("0"), {constant("1")}}});
  const ExplicitSystem par = parallel_connection(f, fp);
  CHECK(par.entries().size() == 1);
  CHECK(par.entries().at(constant("0")) ==
        std::set<Signal>{constant("01")});

  const auto formula = derived_initial_parallel(initial_state_function(f),
                                                initial_state_function(fp));
  CHECK(formula == initial_state_function(par));

  // f || f squares the state sets.
  const ExplicitSystem ff = parallel_connection(f, f);
  for (const auto& [u, xs] : f.entries())
    CHECK(ff.entries().at(u).size() == xs.size() * xs.size());

  const ExplicitSystem disjoint =
      make_system(1, 1, {{Signal(BitVector(1, 0),
                                 {{Rational(1), BitVector(1, 1)}}),
                          {constant("0")}}});
  CHECK_THROWS_AS(parallel_connection(f, disjoint), ars::EmptyCommonInput);
}

TEST_CASE("serial connection") {
  // f: input -> x; h: x -> y.
  const Signal x0 = constant("0"), x1 = constant("1");
  const ExplicitSystem f = make_system(1, 1, {{constant("0"), {x0, x1}}});
  const ExplicitSystem h =
      make_system(1, 1, {{x0, {constant("0")}}, {x1, {constant("0"),
                                                      constant("1")}}});

  const ExplicitSystem hf = serial_compose(h, f);
  CHECK(hf.entries().at(constant("0")) ==
        std::set<Signal>{constant("0"), constant("1")});

  std::size_t bound = 0;
  for (const auto& x : f.entries().at(constant("0")))
    bound += h.states(x).size();
  CHECK(hf.entries().at(constant("0")).size() <= bound);

  const ExplicitSystem star = serial_star_system(h, f);
  CHECK(star.state_width() == 2);
  CHECK(star.entries().at(constant("0")).size() == bound);
  // Projecting the pair states onto y recovers h o f.
  std::set<Signal> ys;
  for (const auto& z : star.entries().at(constant("0")))
    ys.insert(z.project(2, 2));
  CHECK(ys == hf.entries().at(constant("0")));

  // i_{h*f} formula against enumeration.
  CHECK(derived_initial_serial_star(f, initial_state_function(f),
                                    initial_state_function(h)) ==
        initial_state_function(star));

  const ExplicitSystem h_partial = make_system(1, 1, {{x0, {constant("0")}}});
  CHECK_THROWS_AS(serial_compose(h_partial, f), ars::ComposabilityError);
  CHECK_THROWS_AS(serial_star_system(h_partial, f), ars::ComposabilityError);
}

TEST_CASE("intersection") {
  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {constant("0"), constant("1")}}});
  CHECK(intersection(f, f) == f);

  const ExplicitSystem g =
      make_system(1, 1, {{constant("0"), {constant("1")}}});
  const ExplicitSystem fg = intersection(f, g);
  CHECK(fg.entries().at(constant("0")) == std::set<Signal>{constant("1")});

  const ExplicitSystem disjoint =
      make_system(1, 1, {{constant("0"), {Signal(BitVector(1, 0),
                                                 {{Rational(1),
                                                   BitVector(1, 1)}})}}});
  CHECK_THROWS_AS(intersection(g, disjoint), ars::EmptyIntersection);
}

TEST_CASE("intersection initial-value formula can exceed the realized set") {
  const Signal rise(BitVector(1, 0), {{Rational(1), BitVector(1, 1)}});
  const Signal fall(BitVector(1, 0), {{Rational(2), BitVector(1, 1)}});
  const Signal shared = constant("1");
  // rise and fall share the initial value 0 but are different signals, so
  // u is kept in W only through `shared`.
  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {rise, shared}}});
  const ExplicitSystem g =
      make_system(1, 1, {{constant("0"), {fall, shared}}});
  const ExplicitSystem fg = intersection(f, g);
  const auto formula = derived_initial_intersection(
      initial_state_function(f), initial_state_function(g), fg.domain());
  const auto realized = initial_state_function(fg);
  CHECK(formula.entries.at(constant("0")).size() == 2);
  CHECK(realized.entries.at(constant("0")).size() == 1);
  CHECK_FALSE(formula == realized);
}

TEST_CASE("union") {
  const ExplicitSystem f =
      make_system(1, 1, {{constant("0"), {constant("0")}}});
  const ExplicitSystem g =
      make_system(1, 1, {{constant("0"), {constant("1")}},
                         {constant("1"), {constant("1")}}});
  CHECK(union_systems(f, f) == f);

  const ExplicitSystem fu = union_systems(f, g);
  CHECK(fu.entries().at(constant("0")) ==
        std::set<Signal>{constant("0"), constant("1")});
  CHECK(fu.entries().at(constant("1")) == std::set<Signal>{constant("1")});

  // W_{f u g} = W_f u W_g.
  auto w = computation_domain(f);
  const auto wg = computation_domain(g);
  w.insert(wg.begin(), wg.end());
  CHECK(computation_domain(fu) == w);
}

TEST_CASE("union laws on random systems") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const ExplicitSystem a = random_system(rng, 1, 1, 2, 2);
    const ExplicitSystem b = random_system(rng, 1, 1, 2, 2);
    const ExplicitSystem c = random_system(rng, 1, 1, 2, 2);
    CHECK(union_systems(a, b) == union_systems(b, a));
    CHECK(union_systems(union_systems(a, b), c) ==
          union_systems(a, union_systems(b, c)));

    // Dual commutes with union and with the product.
    CHECK(dual_system(union_systems(a, b)) ==
          union_systems(dual_system(a), dual_system(b)));
    CHECK(dual_system(cartesian_product(a, b)) ==
          cartesian_product(dual_system(a), dual_system(b)));

    // The union lemma.
    auto w = computation_domain(a);
    const auto wb = computation_domain(b);
    w.insert(wb.begin(), wb.end());
    CHECK(computation_domain(union_systems(a, b)) == w);
  }
}

TEST_CASE("derived computation functions") {
  using ars::Schedule;
  const ars::GeneratorFunction copy = ars::parse_genfn("n=1 m=1 ; x1' = u1");
  const Signal u(BitVector(1, 1));
  const Signal x(BitVector(1, 0), {{Rational(1), BitVector(1, 1)}});

  ComputationFunction pi;
  pi.state_width = 1;
  pi.input_width = 1;
  const auto res = membership(copy, x, u);
  REQUIRE(res.member);
  pi.entries[{x.initial_value(), u}] = {*res.witness};

  // Dual: same schedule objects under complemented keys.
  const auto dual_pi = derived_computation_dual(pi);
  CHECK(dual_pi.entries.at({BitVector(1, 1), ars::complement(u)}) ==
        pi.entries.at({x.initial_value(), u}));

  // Product: cardinalities multiply.
  ComputationFunction pi2 = pi;
  pi2.entries[{x.initial_value(), u}].insert(
      Schedule(1, {}, Rational(5), Rational(1),
               {{Rational(0), BitVector::ones(1)}}));
  const auto prod_pi = derived_computation_product(pi, pi2);
  CHECK(prod_pi.entries.size() == 1);
  CHECK(prod_pi.entries.begin()->second.size() == 2);

  // Intersection with f = g keeps every schedule.
  const ExplicitSystem f = make_system(1, 1, {{u, {x}}});
  const auto kept =
      derived_computation_intersection(f, f, copy, pi2, pi2);
  CHECK(kept.entries.at({x.initial_value(), u}).size() == 1);
}
