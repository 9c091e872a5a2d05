#include <catch2/catch_amalgamated.hpp>

#include "mobius/catalog.hpp"
#include "mobius/cohomology.hpp"
#include "mobius/errors.hpp"
#include "mobius/incidence.hpp"
#include "mobius/random.hpp"

using namespace mobius;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

// betti vectors run to the poset height; drop the zeros past the last nonzero degree
std::vector<std::size_t> trimmed(std::vector<std::size_t> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

using Betti = std::vector<std::size_t>;

PosetPtr random_small(SplitMix64& rng, std::size_t hi) {
  return share(random_poset(rng, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(hi)))));
}

}  // namespace

TEST_CASE("cohomology on a two-element chain") {
  auto c = chain_poset(2);
  auto one = constant_module(c, 1);
  auto at_a = mobius_cohomology(0, one);
  CHECK(at_a.betti == Betti{0, 0});
  CHECK(at_a.euler == 0);
  auto at_b = mobius_cohomology(1, one);
  CHECK(trimmed(at_b.betti) == Betti{1});
  CHECK(at_b.euler == 1);

  auto bottom_only = principal_cofree(c, 0, 1);
  CHECK(mobius_cohomology(0, bottom_only).betti == Betti{1, 0});
  CHECK(mobius_cohomology(0, bottom_only).euler == 1);

  auto cx = hom_complex({0}, one);
  REQUIRE(cx.deltas.size() == 1);
  CHECK(cx.dims == std::vector<std::size_t>{1, 1});
  CHECK((cx.deltas[0](0, 0) == 1 || cx.deltas[0](0, 0) == -1));
  CHECK(euler_characteristic({0}, one) == 0);
}

TEST_CASE("homology on a two-element chain") {
  auto c = chain_poset(2);
  auto one = constant_module(c, 1);
  CHECK(trimmed(mobius_homology(1, one).betti).empty());
  CHECK(mobius_homology(1, one).euler == 0);
  CHECK(trimmed(mobius_homology(0, one).betti) == Betti{1});
  auto m = constant_module(c, 3);
  CHECK(trimmed(mobius_homology(0, m).betti) == Betti{3});
}

TEST_CASE("homology Euler characteristic is the lower inversion") {
  SplitMix64 rng(31);
  for (int t = 0; t < 60; ++t) {
    auto p = random_small(rng, 6);
    auto n = random_module(p, t % 2 ? QQ : FieldSpec::prime(7), 3, rng.next());
    auto low = lower_inversion(dimension_function(n));
    for (Element a = 0; a < p->size(); ++a) {
      auto cx = mobius_homology_complex(a, n);
      CHECK(cx.is_complex());
      CHECK(mobius_homology(a, n).euler == low(a));
    }
  }
}

TEST_CASE("hom complex dimensions count chains") {
  SplitMix64 rng(32);
  for (int t = 0; t < 60; ++t) {
    auto p = random_small(rng, 7);
    auto n = random_module(p, QQ, 3, rng.next());
    auto z = random_spread(*p, rng);
    auto cx = hom_complex(z, n);
    CHECK(cx.is_complex());
    REQUIRE(cx.dims.size() == p->height() + 1);
    for (std::size_t d = 0; d < cx.dims.size(); ++d) {
      std::size_t expected = 0;
      for (const Chain& s : all_chains(*p, d))
        if (std::find(z.begin(), z.end(), s.min()) != z.end()) expected += n.dim(s.max());
      CHECK(cx.dims[d] == expected);
    }
    auto res = cohomology(cx);
    CHECK(res.euler == euler_poincare(cx));
    CHECK(euler_characteristic(z, n) == euler_chain_sum(z, n));
  }
  auto c = chain_poset(3);
  CHECK_THROWS_AS(hom_complex({0, 2}, constant_module(c, 1)), NotASpread);
  auto zero = hom_complex({0, 1}, zero_module(c));
  for (auto d : zero.dims) CHECK(d == 0);
}

TEST_CASE("corrupt complexes are refused") {
  CochainComplex bad{QQ, {1, 1, 1}, {Matrix::identity(QQ, 1), Matrix::identity(QQ, 1)}, {}};
  CHECK_FALSE(bad.is_complex());
  CHECK_THROWS_AS(cohomology(bad), NotAComplex);
}

TEST_CASE("euler check") {
  auto c = chain_poset(2);
  auto items = euler_check(constant_module(c, 1));
  REQUIRE(items.size() == 2);
  CHECK(items[0].inversion == 0);
  CHECK(items[0].euler == 0);
  CHECK(items[1].inversion == 1);
  CHECK(items[1].euler == 1);

  for (const auto& [name, p] : poset_catalog())
    for (Element a = 0; a < p->size(); ++a) {
      auto cof = principal_cofree(p, a, 2);
      for (const auto& item : euler_check(cof)) {
        CHECK(item.ok);
        CHECK(item.inversion == (item.element == a ? 2 : 0));
        // cofree modules have no higher cohomology
        auto b = trimmed(mobius_cohomology(item.element, cof).betti);
        CHECK(b.size() <= 1);
      }
    }
  for (const auto& item : euler_check(zero_module(diamond_poset()))) {
    CHECK(item.euler == 0);
    CHECK(item.inversion == 0);
  }
}

TEST_CASE("degree zero is the space of maps from the point indicator") {
  SplitMix64 rng(33);
  for (int t = 0; t < 40; ++t) {
    auto p = random_small(rng, 6);
    auto n = random_module(p, FieldSpec::prime(7), 3, rng.next());
    for (Element a = 0; a < p->size(); ++a)
      CHECK(mobius_cohomology(a, n).betti.at(0) == nat_space(indicator(p, {a}, n.field()), n).dimension);
  }
}

TEST_CASE("standard resolution of a two-element chain") {
  auto c = chain_poset(2);
  auto r = standard_resolution(constant_module(c, 1));
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].dims() == std::vector<std::size_t>{2, 1});
  CHECK(r.terms[1].dims() == std::vector<std::size_t>{1, 0});
  CHECK(check_resolution_exact(r).ok);

  auto point = chain_poset(1);
  auto n = constant_module(point, 3);
  auto rp = standard_resolution(n);
  REQUIRE(rp.terms.size() == 1);
  CHECK(rp.terms[0].dims() == n.dims());
}

TEST_CASE("standard resolutions are exact and natural") {
  SplitMix64 rng(34);
  for (int t = 0; t < 40; ++t) {
    auto p = random_small(rng, 5);
    auto n = random_module(p, t % 2 ? QQ : FieldSpec::prime(5), 3, rng.next());
    auto r = standard_resolution(n);
    CHECK(check_resolution_exact(r).ok);
    CHECK(is_natural(n, r.terms[0], r.augmentation));
    for (Element e = 0; e < p->size(); ++e) CHECK(rank(r.augmentation[e]) == n.dim(e));
    for (std::size_t d = 0; d + 1 < r.terms.size(); ++d) {
      CHECK(is_natural(r.terms[d], r.terms[d + 1], r.deltas[d]));
      if (d + 2 < r.terms.size())
        for (Element e = 0; e < p->size(); ++e) CHECK(compose(r.deltas[d + 1][e], r.deltas[d][e]).is_zero());
    }
  }
  CHECK(check_resolution_exact(zero_module(diamond_poset())).ok);
}

TEST_CASE("a corrupted differential is located") {
  auto c = chain_poset(2);
  auto r = standard_resolution(constant_module(c, 1));
  REQUIRE_FALSE(r.deltas[0][0].is_zero());
  r.deltas[0][0] = Matrix::zero(QQ, r.deltas[0][0].rows(), r.deltas[0][0].cols());
  auto report = check_resolution_exact(r);
  CHECK_FALSE(report.ok);
  REQUIRE(report.element);
  CHECK(*report.element == 0);
  REQUIRE(report.degree);
  CHECK(*report.degree >= 0);
  CHECK_FALSE(report.reason.empty());

  auto r2 = standard_resolution(constant_module(c, 1));
  r2.augmentation[1] = Matrix::zero(QQ, r2.augmentation[1].rows(), 1);
  auto report2 = check_resolution_exact(r2);
  CHECK_FALSE(report2.ok);
  CHECK(report2.element == std::optional<Element>{1});
  CHECK(report2.degree == std::optional<int>{-1});
}
