#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "mobius/catalog.hpp"
#include "mobius/errors.hpp"
#include "mobius/poset.hpp"
#include "mobius/random.hpp"

using namespace mobius;

namespace {

Chain chain(std::initializer_list<Element> v) { return Chain{std::vector<Element>(v)}; }

// Every d-simplex of the order complex, found by testing all subsets.
std::vector<Chain> brute_force_chains(const Poset& p, std::size_t d) {
  std::vector<Chain> out;
  for (ElementMask s = 1; s < (ElementMask{1} << p.size()); ++s) {
    ElementSet members = from_mask(s);
    if (members.size() != d + 1) continue;
    std::sort(members.begin(), members.end(), [&](Element a, Element b) { return p.lt(a, b) || (!p.lt(b, a) && a < b); });
    bool total = true;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) total = total && p.lt(members[i], members[i + 1]);
    if (total) out.push_back(Chain{members});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("poset_from_relations computes the closure") {
  auto p = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.covers() == std::vector<std::pair<Element, Element>>{{0, 1}, {1, 2}});
  CHECK(p.height() == 2);

  auto anti = Poset::from_relations({"a", "b"}, {});
  CHECK_FALSE(anti.comparable(0, 1));
  CHECK(anti.leq(0, 0));
}

TEST_CASE("poset_from_relations rejects cycles and dangling names") {
  CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  CHECK_THROWS_AS(Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}), CycleError);
  CHECK_THROWS_AS(Poset::from_relations({"a"}, {{"a", "z"}}), UnknownElement);
  CHECK_THROWS_AS(Poset::from_relations({"a", "a"}, {}), UnknownElement);
  CHECK_THROWS_AS(Poset::from_index_relations(element_names(65), {}), SizeCap);
  CHECK_THROWS_AS(Poset::from_index_relations(element_names(5), {}, 4), SizeCap);
}

TEST_CASE("closure is idempotent") {
  SplitMix64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Poset p = random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 9)));
    std::vector<std::pair<Element, Element>> all;
    for (Element a = 0; a < p.size(); ++a)
      for (Element b : from_mask(p.up_set(a))) all.emplace_back(a, b);
    CHECK(Poset::from_index_relations(p.names(), all) == p);
  }
}

TEST_CASE("intervals") {
  auto c = chain_poset(3);
  CHECK(c->interval(0, 2) == ElementSet{0, 1, 2});
  CHECK(c->interval(1, 1) == ElementSet{1});
  CHECK_THROWS_AS(c->interval(2, 0), NotComparable);
  auto d = diamond_poset();
  CHECK(d->interval(0, 3) == ElementSet{0, 1, 2, 3});
}

TEST_CASE("chains with a given minimum") {
  auto c = chain_poset(3);
  CHECK(chains_with_min(*c, 0, 1) == std::vector<Chain>{chain({0, 1}), chain({0, 2})});
  CHECK(chains_with_min(*c, 0, 2) == std::vector<Chain>{chain({0, 1, 2})});
  CHECK(chains_with_min(*antichain_poset(3), 0, 1).empty());

  CHECK(chains_with_min_in(*c, {0, 1}, 1) == std::vector<Chain>{chain({0, 1}), chain({0, 2}), chain({1, 2})});
  CHECK(chains_with_min_in(*c, {0, 1, 2}, 0) == std::vector<Chain>{chain({0}), chain({1}), chain({2})});
  CHECK(chains_with_min_in(*c, {}, 0).empty());
}

TEST_CASE("chains with a given maximum") {
  auto c = chain_poset(3);
  CHECK(chains_with_max(*c, 2, 1) == std::vector<Chain>{chain({0, 2}), chain({1, 2})});
  CHECK(chains_with_max(*c, 2, 2) == std::vector<Chain>{chain({0, 1, 2})});
  CHECK(chains_with_max(*c, 0, 0) == std::vector<Chain>{chain({0})});
  CHECK(chains_with_max(*c, 0, 1).empty());
}

TEST_CASE("chain census matches subset enumeration") {
  SplitMix64 rng(11);
  for (int t = 0; t < 60; ++t) {
    Poset p = random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    for (std::size_t d = 0; d <= p.height() + 1; ++d) {
      auto expected = brute_force_chains(p, d);
      auto got = all_chains(p, d);
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      std::size_t by_min = 0, by_max = 0;
      for (Element a = 0; a < p.size(); ++a) {
        by_min += chains_with_min(p, a, d).size();
        by_max += chains_with_max(p, a, d).size();
      }
      CHECK(by_min == expected.size());
      CHECK(by_max == expected.size());
    }
  }
}

TEST_CASE("spreads") {
  auto c = chain_poset(3);
  CHECK_FALSE(is_spread(*c, {0, 2}));
  CHECK(is_spread(*c, {1}));
  CHECK(is_spread(*diamond_poset(), {1, 2}));
  CHECK(is_spread(*c, {}));

  SplitMix64 rng(3);
  for (int t = 0; t < 40; ++t) {
    Poset p = random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    for (Element a = 0; a < p.size(); ++a) {
      CHECK(is_spread(p, {a}));
      for (Element c2 : from_mask(p.up_set(a))) CHECK(is_spread(p, p.interval(a, c2)));
    }
    CHECK(is_spread(p, random_spread(p, rng)));
  }
}

TEST_CASE("facets keep the minimum and carry alternating signs") {
  auto f = facets_with_min(chain({0, 1, 2}), 0);
  REQUIRE(f.size() == 2);
  CHECK(f[0].face == chain({0, 2}));
  CHECK(f[0].sign == -1);
  CHECK(f[1].face == chain({0, 1}));
  CHECK(f[1].sign == 1);

  auto g = facets_with_min(chain({0, 1}), 0);
  REQUIRE(g.size() == 1);
  CHECK(g[0].face == chain({0}));
  CHECK(g[0].sign == -1);
}

TEST_CASE("signed faces of faces cancel") {
  // For every chain and every codimension-two face, the two routes cancel.
  SplitMix64 rng(17);
  for (int t = 0; t < 30; ++t) {
    Poset p = random_poset(rng, static_cast<std::size_t>(rng.uniform(3, 8)));
    for (std::size_t d = 2; d <= p.height(); ++d)
      for (const Chain& tau : all_chains(p, d)) {
        std::map<Chain, int> total, total_min;
        for (const auto& f1 : facets(tau))
          for (const auto& f2 : facets(f1.face)) total[f2.face] += f1.sign * f2.sign;
        for (const auto& f1 : facets_with_min(tau, tau.min()))
          for (const auto& f2 : facets_with_min(f1.face, tau.min())) total_min[f2.face] += f1.sign * f2.sign;
        for (const auto& [face, s] : total) CHECK(s == 0);
        for (const auto& [face, s] : total_min) CHECK(s == 0);
      }
  }
}

TEST_CASE("monotone maps") {
  auto c = chain_poset(2);
  std::vector<Element> identity{0, 1}, constant{1, 1}, swap{1, 0};
  CHECK(is_monotone(identity, *c, *c));
  CHECK(is_monotone(constant, *c, *c));
  CHECK_FALSE(is_monotone(swap, *c, *c));
  CHECK_THROWS_AS(MonotoneMap(c, c, swap), NotMonotone);
  CHECK_THROWS_AS(MonotoneMap(c, c, {0}), UnknownElement);

  auto d = diamond_poset();
  MonotoneMap f(d, c, {0, 0, 1, 1});
  MonotoneMap g = MonotoneMap::identity(c);
  CHECK(compose(g, f) == f);
  CHECK(f.fiber(1) == ElementSet{2, 3});
  CHECK_THROWS_AS(compose(f, f), PosetMismatch);
}
