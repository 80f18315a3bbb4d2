#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "extres/errors.hpp"
#include "extres/ideal.hpp"
#include "support/oracles.hpp"

using namespace extres;

namespace {

std::vector<IndexSet> supports(const MonomialIdeal& I) {
  std::vector<IndexSet> out;
  for (const auto& g : I.generators()) out.push_back(g.support());
  return out;
}

// At most max_gens generators, so that permutation loops stay small.
std::vector<MonomialIdeal> random_ideals(unsigned seed, int count, int n_max, std::size_t max_gens = 6) {
  std::mt19937 rng(seed);
  std::vector<MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(n_max - 1));
    auto seeds = oracle::random_seeds(rng, n, 1 + static_cast<int>(rng() % 4), 1, std::min(n, 3));
    if (seeds.empty()) continue;
    auto I = oracle::to_ideal(n, seeds);
    if (I.size() <= max_gens) out.push_back(std::move(I));
  }
  return out;
}

// Linear quotients straight from the definition, with colons by brute force.
bool brute_lq(int n, const std::vector<IndexSet>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<IndexSet> prefix(order.begin(), order.begin() + static_cast<long>(j));
    for (IndexSet g : oracle::minimal_elements(oracle::colon_set(n, prefix, order[j]))) {
      if (cardinality(g) != 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("membership") {
  Ambient a(4);
  auto I = make_ideal(a, {{2}, {3, 4}});
  CHECK(I.contains(Monomial::of(a, {2, 3})));
  CHECK_FALSE(make_ideal(a, {{3, 4}}).contains(Monomial::of(a, {3})));
  CHECK(make_ideal(a, {{1, 2}}).contains(Monomial::of(a, {1, 2, 3})));
  CHECK_FALSE(MonomialIdeal(a).contains(Monomial::of(a, {1})));
}

TEST_CASE("minimalize drops redundant generators and sorts") {
  Ambient a(5);
  auto I = make_ideal(a, {{1, 2, 3}, {2, 4}, {1, 2}, {2, 4}});
  CHECK(I.to_string() == "(e1*e2, e2*e4)");
  CHECK(I.size() == 2);
  CHECK(make_ideal(a, {{2, 4, 5}, {1, 3}, {1, 4}}).to_string() == "(e1*e3, e1*e4, e2*e4*e5)");
  CHECK(MonomialIdeal(a).is_zero());
}

TEST_CASE("index_lex_less puts prefixes and smaller leading indices first") {
  CHECK(index_lex_less(make_index_set({1, 3}), make_index_set({1, 4})));
  CHECK(index_lex_less(make_index_set({1, 4}), make_index_set({2, 3})));
  CHECK(index_lex_less(make_index_set({1}), make_index_set({1, 2})));
  CHECK_FALSE(index_lex_less(make_index_set({2}), make_index_set({2})));
}

TEST_CASE("colon: worked examples") {
  Ambient a4(4), a6(6);
  CHECK(colon(MonomialIdeal(a4), Monomial::of(a4, {2})) == make_ideal(a4, {{2}}));
  CHECK(colon(make_ideal(a4, {{2}}), Monomial::of(a4, {3, 4})) == make_ideal(a4, {{2}, {3}, {4}}));
  CHECK(colon(make_ideal(a6, {{1, 3}, {1, 4}}), Monomial::of(a6, {2, 4, 6})) ==
        make_ideal(a6, {{1}, {2}, {4}, {6}}));
  CHECK(colon(make_ideal(a4, {{3, 4}}), Monomial::of(a4, {2})) == make_ideal(a4, {{2}, {3, 4}}));
  CHECK_THROWS_AS(colon(make_ideal(a4, {{1}}), Monomial::unit(a4)), UnitColon);
}

TEST_CASE("colon agrees with brute-force membership over all 2^n monomials") {
  for (const auto& I : random_ideals(3, 120, 5)) {
    int n = I.ambient().n();
    for (IndexSet u : oracle::all_monomials(n)) {
      if (u == 0) continue;
      auto q = colon(I, Monomial(I.ambient(), u));
      REQUIRE(oracle::ideal_set(n, supports(q)) == oracle::colon_set(n, supports(I), u));
    }
  }
}

TEST_CASE("check_linear_quotients: worked examples") {
  Ambient a4(4);
  auto I = make_ideal(a4, {{2}, {3, 4}});
  std::vector<Monomial> good{Monomial::of(a4, {2}), Monomial::of(a4, {3, 4})};
  std::vector<Monomial> bad{Monomial::of(a4, {3, 4}), Monomial::of(a4, {2})};
  auto c = check_linear_quotients(I, good);
  REQUIRE(c.ok());
  CHECK(c.order().sets() == std::vector<IndexSet>{make_index_set({2}), make_index_set({2, 3, 4})});
  auto d = check_linear_quotients(I, bad);
  CHECK_FALSE(d.ok());
  CHECK(d.failure() == LqCheck::Failure::nonlinear_colon);
  CHECK(d.failing_position() == 2);
  CHECK(*d.obstruction() == Monomial::of(a4, {3, 4}));

  // A stable ideal.
  Ambient a5(5);
  auto S = make_ideal(a5, {{1, 2}, {1, 3}, {2, 3}, {3, 4, 5}});
  auto r = check_linear_quotients(S, reverse_deglex_order(S));
  REQUIRE(r.ok());
  CHECK(r.order().set(3) == make_index_set({1, 2, 3, 4, 5}));

  // Linear quotients along an order that is not degree increasing.
  auto J = make_ideal(a4, {{1, 2}, {2, 3, 4}, {1, 3}});
  std::vector<Monomial> mixed{Monomial::of(a4, {1, 2}), Monomial::of(a4, {2, 3, 4}), Monomial::of(a4, {1, 3})};
  auto m = check_linear_quotients(J, mixed);
  REQUIRE(m.ok());
  CHECK_FALSE(m.order().degree_increasing());
  CHECK(m.order().sets() ==
        std::vector<IndexSet>{make_index_set({1, 2}), make_index_set({1, 2, 3, 4}), make_index_set({1, 2, 3})});
  CHECK_THROWS_AS(m.order().require_degree_increasing(), InvalidArgument);

  CHECK_THROWS_AS(check_linear_quotients(I, std::vector<Monomial>{Monomial::of(a4, {2})}), InvalidArgument);
  CHECK_THROWS_AS(check_linear_quotients(I, std::vector<Monomial>{Monomial::of(a4, {2}), Monomial::of(a4, {1})}),
                  InvalidArgument);
}

TEST_CASE("check_linear_quotients agrees with the definition on every permutation") {
  for (const auto& I : random_ideals(17, 80, 5)) {
    int n = I.ambient().n();
    std::vector<std::size_t> perm(I.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<IndexSet> order;
      for (auto p : perm) order.push_back(I.generators()[p].support());
      auto c = check_linear_quotients(I, perm);
      REQUIRE(c.ok() == brute_lq(n, order));
      if (c.ok()) {
        const auto& lq = c.order();
        CHECK(lq.set(0) == lq.generator(0).support());
        for (std::size_t j = 0; j < lq.size(); ++j) CHECK(is_subset(lq.generator(j).support(), lq.set(j)));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("find_lq_order: round trip, determinism and exhaustiveness") {
  Ambient a6(6);
  auto ex = make_ideal(a6, {{1, 3}, {1, 4}, {2, 4, 6}});
  auto lq = find_lq_order(ex);
  REQUIRE(lq);
  CHECK(lq->order() == ex.generators());

  LqSearchStats stats;
  CHECK_FALSE(find_lq_order(make_ideal(a6, {{1, 2}, {3, 4}, {5, 6}}), &stats));
  CHECK(stats.orders_ruled_out == 6);

  Ambient a3(3);
  auto principal = find_lq_order(make_ideal(a3, {{1, 3}}));
  REQUIRE(principal);
  CHECK(principal->set(0) == make_index_set({1, 3}));

  for (const auto& I : random_ideals(23, 120, 5)) {
    auto found = find_lq_order(I);
    // Brute force over all degree-increasing permutations.
    std::vector<std::size_t> perm(I.size());
    std::iota(perm.begin(), perm.end(), 0);
    bool exists = false;
    do {
      bool increasing = true;
      for (std::size_t k = 1; k < perm.size(); ++k) {
        increasing = increasing && I.generators()[perm[k]].degree() >= I.generators()[perm[k - 1]].degree();
      }
      if (increasing && check_linear_quotients(I, perm).ok()) exists = true;
    } while (!exists && std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(found.has_value() == exists);
    if (found) {
      CHECK(found->degree_increasing());
      CHECK(check_linear_quotients(I, found->order()).ok());
      auto again = find_lq_order(I);
      CHECK(again->order() == found->order());
    }
  }
}

TEST_CASE("stability predicates") {
  Ambient a5(5), a4(4), a3(3);
  CHECK(is_stable(make_ideal(a5, {{1, 2}, {1, 3}, {2, 3}, {3, 4, 5}})));
  CHECK(is_strongly_stable(make_ideal(a3, {{1}})));
  CHECK_FALSE(is_strongly_stable(make_ideal(a4, {{2, 4}})));
  // Stable but not strongly stable: e1e3 is missing.
  auto s = make_ideal(a3, {{1, 2}, {2, 3}});
  CHECK(is_stable(s));
  CHECK_FALSE(is_strongly_stable(s));
  CHECK_FALSE(is_stable(make_ideal(a4, {{2, 4}})));
}

TEST_CASE("stable ideals in reverse-deglex order have set(u) = [m(u)]") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto seeds = oracle::random_seeds(rng, n, 1 + static_cast<int>(rng() % 3), 1, 3);
    if (seeds.empty()) continue;
    auto I = oracle::to_ideal(n, oracle::borel_closure(n, seeds, true));
    REQUIRE(is_stable(I));
    auto c = check_linear_quotients(I, reverse_deglex_order(I));
    REQUIRE(c.ok());
    for (std::size_t j = 0; j < c.order().size(); ++j) {
      CHECK(c.order().set(j) == initial_segment(c.order().generator(j).max_index()));
    }
  }
}

TEST_CASE("strongly stable closures are strongly stable; stable closures are stable") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto seeds = oracle::random_seeds(rng, n, 2, 1, 3);
    if (seeds.empty()) continue;
    CHECK(is_strongly_stable(oracle::to_ideal(n, oracle::borel_closure(n, seeds, false))));
    CHECK(is_stable(oracle::to_ideal(n, oracle::borel_closure(n, seeds, true))));
  }
}
