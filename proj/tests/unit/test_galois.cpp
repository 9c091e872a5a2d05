#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mobius/catalog.hpp"
#include "mobius/errors.hpp"
#include "mobius/galois.hpp"
#include "mobius/random.hpp"

using namespace mobius;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

// All maps P -> Q by plain counting, filtered for monotonicity.
std::vector<std::vector<Element>> all_monotone(const Poset& p, const Poset& q) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> v(p.size(), 0);
  while (true) {
    if (is_monotone(v, p, q)) out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == q.size()) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

GaloisConnection identity_connection(const PosetPtr& p) {
  return {MonotoneMap::identity(p), MonotoneMap::identity(p)};
}

}  // namespace

TEST_CASE("verify_connection") {
  auto c2 = chain_poset(2);
  auto id = MonotoneMap::identity(c2);
  CHECK(verify_connection(id, id).ok);

  auto bad = verify_connection(id, MonotoneMap::constant(c2, c2, 0));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  // f(b) = b ≤ b holds but b ≤ g(b) = a does not
  CHECK(*bad.witness == std::pair<Element, Element>{1, 1});
  CHECK_THROWS_AS(GaloisConnection(id, MonotoneMap::constant(c2, c2, 0)), NotAdjoint);

  // inclusion of the sub-chain {a, c} into a<b<c<d, with floor as its right adjoint
  auto c4 = chain_poset(4);
  MonotoneMap inclusion(c2, c4, {0, 2});
  MonotoneMap floor(c4, c2, {0, 0, 1, 1});
  CHECK(verify_connection(inclusion, floor).ok);
  CHECK_FALSE(verify_connection(floor, inclusion).ok);
  CHECK_THROWS_AS(verify_connection(inclusion, MonotoneMap::identity(c4)), PosetMismatch);
}

TEST_CASE("enumeration of small cases") {
  auto pt = chain_poset(1);
  auto c2 = chain_poset(2);
  CHECK(enumerate_connections(pt, pt).size() == 1);
  auto one = enumerate_connections(c2, pt);
  REQUIRE(one.size() == 1);
  CHECK(one[0].left().values() == std::vector<Element>{0, 0});
  CHECK(one[0].right().values() == std::vector<Element>{1});
  // the other direction: f picks the bottom
  auto back = enumerate_connections(pt, c2);
  REQUIRE(back.size() == 1);
  CHECK(back[0].left().values() == std::vector<Element>{0});

  CHECK_THROWS_AS(enumerate_connections(chain_poset(7), pt), SizeCap);
  CHECK_NOTHROW(enumerate_connections(chain_poset(7), pt, 7));
}

TEST_CASE("enumeration agrees with a brute force over pairs") {
  auto catalog = poset_catalog();
  for (const auto& [pn, p] : catalog)
    for (const auto& [qn, q] : catalog) {
      auto fs = all_monotone(*p, *q);
      auto gs = all_monotone(*q, *p);
      CHECK(enumerate_monotone_maps(p, q).size() == fs.size());
      std::set<std::pair<std::vector<Element>, std::vector<Element>>> expected, got;
      for (const auto& f : fs)
        for (const auto& g : gs)
          if (verify_connection(MonotoneMap(p, q, f), MonotoneMap(q, p, g)).ok) expected.emplace(f, g);
      auto found = enumerate_connections(p, q);
      std::set<std::vector<Element>> lefts, rights;
      for (const auto& c : found) {
        got.emplace(c.left().values(), c.right().values());
        lefts.insert(c.left().values());
        rights.insert(c.right().values());
      }
      CHECK(got == expected);
      // adjoints are unique
      CHECK(lefts.size() == found.size());
      CHECK(rights.size() == found.size());
      CHECK(enumerate_connections(p, q).size() == found.size());
    }
}

TEST_CASE("Rota's theorem on the catalog") {
  SplitMix64 rng(41);
  for (const auto& [pn, p] : poset_catalog())
    for (const auto& [qn, q] : poset_catalog())
      for (const auto& c : enumerate_connections(p, q)) {
        CHECK(rota_classical_check(c).passed());
        for (Element y = 0; y < q->size(); ++y) CHECK(rota_inversion_check(c, GrFunction::delta(q, y)).passed());
        CHECK(rota_inversion_check(c, random_gr_function(q, rng, -5, 5)).passed());
        CHECK(rota_inversion_check(c, GrFunction(q)).passed());
      }
}

TEST_CASE("Rota classical items carry both sides") {
  auto d = diamond_poset();
  auto report = rota_classical_check(identity_connection(d));
  CHECK(report.items.size() == d->size() * d->size());
  for (const auto& item : report.items) CHECK(item.lhs == item.rhs);
  CHECK(report.passed());
}

TEST_CASE("Ext form of Rota's theorem") {
  auto d = diamond_poset();
  auto id = identity_connection(d);
  for (Element a = 0; a < d->size(); ++a) {
    CHECK(rota_ext_check(id, zero_module(d), a).passed());
    for (const auto& item : rota_ext_check(id, zero_module(d), a).items) CHECK(item.lhs == item.rhs);
  }
  SplitMix64 rng(42);
  auto c3 = chain_poset(3), b2 = boolean_lattice(2);
  for (const auto& c : enumerate_connections(c3, b2)) {
    auto n = random_module(b2, QQ, 3, rng.next());
    for (Element a = 0; a < c3->size(); ++a) CHECK(rota_ext_check(c, n, a).passed());
  }
  for (const auto& c : enumerate_connections(b2, c3)) {
    auto n = random_module(c3, FieldSpec::prime(7), 3, rng.next());
    for (Element a = 0; a < b2->size(); ++a) CHECK(rota_ext_check(c, n, a).passed());
  }
}

TEST_CASE("functor equalities") {
  SplitMix64 rng(43);
  auto z = zigzag_poset(4), c2 = chain_poset(2);
  for (const auto& c : enumerate_connections(z, c2)) {
    auto n = random_module(c2, QQ, 3, rng.next());
    auto m = random_module(z, QQ, 3, rng.next());
    auto report = check_functor_equalities(c, n, m);
    CHECK(report.passed());
    CHECK(report.items.size() >= 2);
  }
  auto d = diamond_poset();
  CHECK(check_functor_equalities(identity_connection(d), constant_module(d, 2), zero_module(d)).passed());
}

TEST_CASE("adjunction dimensions") {
  SplitMix64 rng(44);
  auto d = diamond_poset();
  auto m = random_module(d, QQ, 2, 1), n = random_module(d, QQ, 2, 2);
  auto report = adjunction_dim_check(MonotoneMap::identity(d), m, n);
  CHECK(report.passed());
  REQUIRE(report.items.size() == 2);
  CHECK(report.items[0].lhs == std::to_string(nat_space(m, n).dimension));
  CHECK(adjunction_dim_check(MonotoneMap::identity(d), zero_module(d), zero_module(d)).passed());

  for (int t = 0; t < 30; ++t) {
    auto p = share(random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 5))));
    auto q = share(random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 5))));
    auto f = random_monotone_map(rng, p, q);
    CHECK(adjunction_dim_check(f, random_module(p, QQ, 2, rng.next()), random_module(q, QQ, 2, rng.next())).passed());
  }
}
