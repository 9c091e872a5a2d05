#include <catch2/catch_amalgamated.hpp>

#include "mobius/catalog.hpp"
#include "mobius/errors.hpp"
#include "mobius/incidence.hpp"
#include "mobius/matrix.hpp"
#include "mobius/random.hpp"

using namespace mobius;

namespace {

GrFunction fn(const PosetPtr& p, std::vector<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return GrFunction(p, out);
}

PosetPtr random_small(SplitMix64& rng, std::size_t lo = 1, std::size_t hi = 8) {
  return share(random_poset(rng, static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)))));
}

// Solve Σ_{b ≥ a} g(b) = f(a) as a linear system over QQ, no μ involved.
std::vector<Scalar> solve_zeta_system(const GrFunction& f) {
  const Poset& p = f.poset();
  Matrix z(FieldSpec::rationals(), p.size(), p.size());
  Matrix rhs(FieldSpec::rationals(), p.size(), 1);
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) z.set(a, b, 1);
    rhs.set(a, 0, Scalar(f(a)));
  }
  auto g = solve(z, rhs);
  REQUIRE(g);
  std::vector<Scalar> out;
  for (Element a = 0; a < p.size(); ++a) out.push_back((*g)(a, 0));
  return out;
}

}  // namespace

TEST_CASE("zeta and the unit") {
  auto c = chain_poset(2);
  auto z = zeta(c);
  CHECK(z(0, 1) == 1);
  CHECK(z(0, 0) == 1);
  CHECK_THROWS_AS(z(1, 0), NotComparable);
  CHECK(z.value_or_zero(1, 0) == 0);

  auto anti = antichain_poset(3);
  auto za = zeta(anti);
  for (Element a = 0; a < 3; ++a) CHECK(za(a, a) == 1);
  CHECK_THROWS_AS(za(0, 1), NotComparable);

  auto one = identity_one(c);
  CHECK(one(0, 0) == 1);
  CHECK(one(0, 1) == 0);
}

TEST_CASE("convolution") {
  auto c3 = chain_poset(3);
  auto zz = convolve(zeta(c3), zeta(c3));
  CHECK(zz(0, 1) == 2);
  CHECK(zz(0, 2) == 3);
  CHECK(zz(1, 1) == 1);
  CHECK_THROWS_AS(convolve(zeta(c3), zeta(chain_poset(2))), PosetMismatch);

  SplitMix64 rng(21);
  for (int t = 0; t < 30; ++t) {
    auto p = random_small(rng);
    IncidenceFunction alpha(p);
    for (Element a = 0; a < p->size(); ++a)
      for (Element b : from_mask(p->up_set(a))) alpha.set(a, b, Integer(static_cast<long>(rng.uniform(-4, 4))));
    CHECK(convolve(identity_one(p), alpha) == alpha);
    CHECK(convolve(alpha, identity_one(p)) == alpha);
    auto zz2 = convolve(zeta(p), zeta(p));
    for (Element a = 0; a < p->size(); ++a)
      for (Element b : from_mask(p->up_set(a))) CHECK(zz2(a, b) == static_cast<long>(p->interval(a, b).size()));
  }
}

TEST_CASE("Mobius function examples") {
  auto c2 = chain_poset(2);
  CHECK(mobius_recursive(c2)(0, 1) == -1);
  CHECK(mobius_hall(c2)(0, 1) == -1);
  auto c3 = chain_poset(3);
  CHECK(mobius_hall(c3)(0, 2) == 0);
  CHECK(mobius_recursive(c3)(0, 2) == 0);
  auto d = diamond_poset();
  CHECK(mobius_recursive(d)(0, 3) == 1);
  CHECK(mobius_hall(d)(0, 3) == 1);
  // boolean lattice B_k: μ(bottom, top) = (-1)^k
  for (std::size_t k = 1; k <= 4; ++k) {
    auto b = boolean_lattice(k);
    Element bottom = 0, top = b->size() - 1;
    REQUIRE(b->leq(bottom, top));
    CHECK(mobius_recursive(b)(bottom, top) == (k % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("mu inverts zeta and matches the chain-counting oracle") {
  SplitMix64 rng(7);
  for (int t = 0; t < 120; ++t) {
    auto p = random_small(rng);
    auto mu = mobius_recursive(p);
    CHECK(mobius_hall(p) == mu);
    CHECK(convolve(zeta(p), mu) == identity_one(p));
    CHECK(convolve(mu, zeta(p)) == identity_one(p));
    for (Element a = 0; a < p->size(); ++a) CHECK(mu(a, a) == 1);
  }
}

TEST_CASE("inversion examples") {
  auto c2 = chain_poset(2);
  CHECK(upper_inversion(fn(c2, {1, 1})) == fn(c2, {0, 1}));
  CHECK(lower_inversion(fn(c2, {1, 1})) == fn(c2, {1, 0}));
  CHECK(upper_inversion(fn(c2, {0, 0})) == fn(c2, {0, 0}));
  CHECK(lower_inversion(fn(c2, {0, 0})) == fn(c2, {0, 0}));
  // delta functions invert to a row of μ
  auto d = diamond_poset();
  CHECK(upper_inversion(GrFunction::delta(d, 3)) == fn(d, {1, -1, -1, 1}));
}

TEST_CASE("inversion identities and uniqueness on random functions") {
  SplitMix64 rng(8);
  for (int t = 0; t < 100; ++t) {
    auto p = random_small(rng);
    auto f = random_gr_function(p, rng, -5, 5);
    auto up = upper_inversion(f), low = lower_inversion(f);
    for (Element a = 0; a < p->size(); ++a) {
      Integer su = 0, sl = 0;
      for (Element b : from_mask(p->up_set(a))) su += up(b);
      for (Element b : from_mask(p->down_set(a))) sl += low(b);
      CHECK(su == f(a));
      CHECK(sl == f(a));
    }
    auto g = solve_zeta_system(f);
    for (Element a = 0; a < p->size(); ++a) CHECK(g[a] == Scalar(up(a)));
  }
}

TEST_CASE("pushforward and pullback of functions") {
  auto c3 = chain_poset(3);
  auto c2 = chain_poset(2);
  auto pt = chain_poset(1);
  auto m = fn(c3, {2, -1, 5});

  CHECK(pushforward_fn(MonotoneMap::constant(c3, pt, 0), m) == fn(pt, {6}));
  CHECK(pushforward_fn(MonotoneMap::identity(c3), m) == m);
  MonotoneMap two(c3, c2, {0, 1, 1});
  CHECK(pushforward_fn(two, m) == fn(c2, {2, 4}));
  MonotoneMap skip(c2, c3, {0, 2});
  CHECK(pushforward_fn(skip, fn(c2, {3, 4})) == fn(c3, {3, 0, 4}));

  auto n = fn(c2, {7, -3});
  CHECK(pullback_fn(MonotoneMap::identity(c2), n) == n);
  CHECK(pullback_fn(MonotoneMap::constant(c3, c2, 1), n) == fn(c3, {-3, -3, -3}));
  CHECK(pullback_fn(two, n) == fn(c3, {7, -3, -3}));

  SplitMix64 rng(4);
  for (int t = 0; t < 50; ++t) {
    auto p = random_small(rng, 1, 6), q = random_small(rng, 1, 6), r = random_small(rng, 1, 6);
    auto f = random_monotone_map(rng, p, q);
    auto g = random_monotone_map(rng, q, r);
    auto nr = random_gr_function(r, rng, -5, 5);
    auto mp = random_gr_function(p, rng, -5, 5);
    CHECK(pullback_fn(compose(g, f), nr) == pullback_fn(f, pullback_fn(g, nr)));
    CHECK(pushforward_fn(compose(g, f), mp) == pushforward_fn(g, pushforward_fn(f, mp)));
  }
}
