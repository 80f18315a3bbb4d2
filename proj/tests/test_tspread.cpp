#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extres/betti.hpp"
#include "extres/errors.hpp"
#include "extres/tspread.hpp"
#include "support/oracles.hpp"

using namespace extres;

namespace {

std::vector<MonomialIdeal> random_spread(unsigned seed, int count, int gap, int max_degree) {
  std::mt19937 rng(seed);
  std::vector<MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto seeds = oracle::random_seeds(rng, n, 1 + static_cast<int>(rng() % 3), 1, max_degree, gap);
    if (seeds.empty()) continue;
    out.push_back(oracle::to_ideal(n, oracle::borel_closure(n, seeds, false, gap)));
  }
  return out;
}

// set(u_j) straight from brute-force colons along the given order.
std::vector<IndexSet> brute_sets(const MonomialIdeal& I, const std::vector<Monomial>& order) {
  std::vector<IndexSet> sets, prefix;
  for (const auto& u : order) {
    IndexSet s = 0;
    for (IndexSet g : oracle::minimal_elements(oracle::colon_set(I.ambient().n(), prefix, u.support()))) s |= g;
    sets.push_back(s);
    prefix.push_back(u.support());
  }
  return sets;
}

}  // namespace

TEST_CASE("t vectors") {
  auto t = TSpreadVector::parse("2,2");
  CHECK(t.gaps() == std::vector<int>{2, 2});
  CHECK(t.max_degree() == 3);
  CHECK(t.gap(2) == 2);
  CHECK(t.to_string() == "(2,2)");
  CHECK_THROWS_AS(TSpreadVector::parse("2,,2"), InvalidArgument);
  CHECK_THROWS_AS(TSpreadVector::parse("a"), InvalidArgument);
  CHECK_THROWS_AS(TSpreadVector({}), InvalidArgument);
  CHECK_THROWS_AS(TSpreadVector({-1}), InvalidArgument);
}

TEST_CASE("t-spread monomials") {
  TSpreadVector t({2, 2});
  Ambient a(6);
  CHECK(is_tspread(Monomial::of(a, {1, 3, 5}), t));
  CHECK_FALSE(is_tspread(Monomial::of(a, {1, 2}), t));
  CHECK(is_tspread(Monomial::of(a, {4}), t));
  CHECK_THROWS_AS(is_tspread(Monomial::of(a, {1, 3, 5, 6}), t), NotTSpread);
  TSpreadVector mixed({1, 3});
  CHECK(is_tspread(Monomial::of(a, {1, 2, 5}), mixed));
  CHECK_FALSE(is_tspread(Monomial::of(a, {1, 2, 4}), mixed));
}

TEST_CASE("closure matches the brute-force exchange closure") {
  TSpreadVector t({2, 2});
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto seeds = oracle::random_seeds(rng, n, 2, 1, 3, 2);
    if (seeds.empty()) continue;
    std::vector<Monomial> ms;
    for (IndexSet s : seeds) ms.emplace_back(Ambient(n), s);
    auto closed = tspread_closure(Ambient(n), ms, t);
    REQUIRE(closed == oracle::to_ideal(n, oracle::borel_closure(n, seeds, false, 2)));
    CHECK(is_tspread_strongly_stable(closed, t));
  }
  Ambient a(4);
  CHECK_THROWS_AS(tspread_closure(a, std::vector<Monomial>{Monomial::of(a, {1, 2})}, t), NotTSpread);
}

TEST_CASE("t-spread strong stability") {
  TSpreadVector t({2, 2});
  Ambient a(6);
  CHECK(is_tspread_strongly_stable(make_ideal(a, {{1, 3}, {1, 4}, {2, 4, 6}}), t));
  CHECK_FALSE(is_tspread_strongly_stable(make_ideal(a, {{2, 4}}), t));
  CHECK_THROWS_AS(is_tspread_strongly_stable(make_ideal(a, {{1, 2}}), t), NotTSpread);
}

TEST_CASE("lex order: linear quotients and sets equal to the closed formula") {
  for (int gap : {1, 2, 3}) {
    TSpreadVector t({gap, gap});
    for (const auto& I : random_spread(100 + static_cast<unsigned>(gap), 80, gap, 3)) {
      auto lq = lex_lq_order(I, t);
      auto sets = brute_sets(I, lq.order());
      for (std::size_t k = 0; k < lq.size(); ++k) {
        REQUIRE(sets[k] == lq.set(k));
        REQUIRE(set_e_formula(lq.generator(k), t) == lq.set(k));
      }
      REQUIRE(betti_tspread(I, t, 4) == betti_lq(lq, 4));
    }
  }
}

TEST_CASE("(1,...,1)-spread reduces to the strongly stable formula") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto seeds = oracle::random_seeds(rng, n, 2, 1, 3);
    if (seeds.empty()) continue;
    auto I = oracle::to_ideal(n, oracle::borel_closure(n, seeds, false));
    CHECK(betti_tspread(I, TSpreadVector({1, 1}), 5) == betti_stable(I, 5));
    CHECK(betti_tspread(I, TSpreadVector({0, 0}), 5) == betti_stable(I, 5));
  }
}

TEST_CASE("increasing lex is not the convention") {
  // For (e1e3, e1e4, e2e4) increasing lex still has linear quotients, but sets
  // no longer match the formula.
  Ambient a(4);
  TSpreadVector t({2});
  auto I = make_ideal(a, {{1, 3}, {1, 4}, {2, 4}});
  CHECK_NOTHROW(lex_lq_order(I, t, LexDirection::decreasing));
  CHECK_THROWS_AS(lex_lq_order(I, t, LexDirection::increasing), Error);
}
