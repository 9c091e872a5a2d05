#include "mobius/cohomology.hpp"

#include <map>

#include "mobius/errors.hpp"

namespace mobius {

bool CochainComplex::is_complex() const {
  for (std::size_t d = 0; d + 1 < deltas.size(); ++d)
    if (!compose(deltas[d + 1], deltas[d]).is_zero()) return false;
  return true;
}

bool ChainComplex::is_complex() const {
  for (std::size_t d = 0; d + 1 < boundaries.size(); ++d)
    if (!compose(boundaries[d], boundaries[d + 1]).is_zero()) return false;
  return true;
}

namespace {

Integer alternating_sum(const std::vector<std::size_t>& v) {
  Integer s = 0;
  for (std::size_t d = 0; d < v.size(); ++d) {
    if (d % 2 == 0)
      s += static_cast<unsigned long>(v[d]);
    else
      s -= static_cast<unsigned long>(v[d]);
  }
  return s;
}

struct BlockLayout {
  std::vector<Chain> chains;
  std::vector<std::size_t> offsets;
  std::map<Chain, std::size_t> position;
  std::size_t total = 0;
};

template <class SizeOf>
BlockLayout layout(std::vector<Chain> chains, SizeOf size_of) {
  BlockLayout l;
  l.chains = std::move(chains);
  for (std::size_t i = 0; i < l.chains.size(); ++i) {
    l.offsets.push_back(l.total);
    l.position.emplace(l.chains[i], i);
    l.total += size_of(l.chains[i]);
  }
  return l;
}

}  // namespace

CohomologyResult cohomology(const CochainComplex& c) {
  const std::size_t top = c.dims.size();
  std::vector<std::size_t> ranks(top, 0);  // ranks[d] = rank δ^d
  for (std::size_t d = 0; d < c.deltas.size(); ++d) ranks[d] = rank(c.deltas[d]);
  if (!c.is_complex()) throw NotAComplex("coboundary squares to a nonzero map");
  CohomologyResult r;
  for (std::size_t d = 0; d < top; ++d) r.betti.push_back(c.dims[d] - ranks[d] - (d > 0 ? ranks[d - 1] : 0));
  r.euler = alternating_sum(r.betti);
  return r;
}

CohomologyResult homology(const ChainComplex& c) {
  const std::size_t top = c.dims.size();
  std::vector<std::size_t> ranks(top + 1, 0);  // ranks[d] = rank ∂_d
  for (std::size_t d = 1; d <= c.boundaries.size(); ++d) ranks[d] = rank(c.boundaries[d - 1]);
  if (!c.is_complex()) throw NotAComplex("boundary squares to a nonzero map");
  CohomologyResult r;
  for (std::size_t d = 0; d < top; ++d) r.betti.push_back(c.dims[d] - ranks[d] - ranks[d + 1]);
  r.euler = alternating_sum(r.betti);
  return r;
}

Integer euler_poincare(const CochainComplex& c) { return alternating_sum(c.dims); }

CochainComplex hom_complex(const ElementSet& z, const PosetModule& n) {
  const Poset& p = n.poset();
  for (Element e : z)
    if (e >= p.size()) throw UnknownElement("spread contains an unknown element");
  if (!is_spread(p, z)) throw NotASpread("element set is not a spread");
  const FieldSpec& k = n.field();
  const std::size_t top = p.height();

  std::vector<BlockLayout> degrees;
  for (std::size_t d = 0; d <= top; ++d)
    degrees.push_back(layout(chains_with_min_in(p, z, d), [&](const Chain& s) { return n.dim(s.max()); }));

  CochainComplex c;
  c.field = k;
  for (const auto& l : degrees) {
    c.dims.push_back(l.total);
    c.labels.push_back(l.chains);
  }
  for (std::size_t d = 0; d < top; ++d) {
    const BlockLayout& src = degrees[d];
    const BlockLayout& dst = degrees[d + 1];
    Matrix delta(k, dst.total, src.total);
    for (std::size_t t = 0; t < dst.chains.size(); ++t) {
      const Chain& tau = dst.chains[t];
      for (const Facet& f : facets(tau)) {
        auto it = src.position.find(f.face);
        if (it == src.position.end()) continue;
        delta.accumulate(dst.offsets[t], src.offsets[it->second],
                         n.map_between(f.face.max(), tau.max()).scaled(f.sign));
      }
    }
    c.deltas.push_back(std::move(delta));
  }
  return c;
}

CohomologyResult mobius_cohomology(Element a, const PosetModule& n) { return cohomology(hom_complex({a}, n)); }

ChainComplex mobius_homology_complex(Element a, const PosetModule& n) {
  const Poset& p = n.poset();
  if (a >= p.size()) throw UnknownElement("unknown element");
  const FieldSpec& k = n.field();
  const std::size_t top = p.height();

  std::vector<BlockLayout> degrees;
  for (std::size_t d = 0; d <= top; ++d)
    degrees.push_back(layout(chains_with_max(p, a, d), [&](const Chain& s) { return n.dim(s.min()); }));

  ChainComplex c;
  c.field = k;
  for (const auto& l : degrees) {
    c.dims.push_back(l.total);
    c.labels.push_back(l.chains);
  }
  for (std::size_t d = 1; d <= top; ++d) {
    const BlockLayout& src = degrees[d];
    const BlockLayout& dst = degrees[d - 1];
    Matrix boundary(k, dst.total, src.total);
    for (std::size_t t = 0; t < src.chains.size(); ++t) {
      const Chain& tau = src.chains[t];
      for (const Facet& f : facets(tau)) {
        auto it = dst.position.find(f.face);
        if (it == dst.position.end()) continue;
        boundary.accumulate(dst.offsets[it->second], src.offsets[t],
                            n.map_between(tau.min(), f.face.min()).scaled(f.sign));
      }
    }
    c.boundaries.push_back(std::move(boundary));
  }
  return c;
}

CohomologyResult mobius_homology(Element a, const PosetModule& n) { return homology(mobius_homology_complex(a, n)); }

Integer euler_characteristic(const ElementSet& z, const PosetModule& n) { return cohomology(hom_complex(z, n)).euler; }

Integer euler_chain_sum(const ElementSet& z, const PosetModule& n) {
  const Poset& p = n.poset();
  if (!is_spread(p, z)) throw NotASpread("element set is not a spread");
  Integer total = 0;
  for (std::size_t d = 0; d <= p.height(); ++d) {
    Integer layer = 0;
    for (const Chain& s : chains_with_min_in(p, z, d)) layer += static_cast<unsigned long>(n.dim(s.max()));
    if (d % 2 == 0)
      total += layer;
    else
      total -= layer;
  }
  return total;
}

std::vector<EulerCheckItem> euler_check(const PosetModule& n) {
  GrFunction inverted = upper_inversion(dimension_function(n));
  std::vector<EulerCheckItem> out;
  for (Element a = 0; a < n.poset().size(); ++a) {
    Integer chi = mobius_cohomology(a, n).euler;
    out.push_back({a, inverted(a), chi, inverted(a) == chi});
  }
  return out;
}

StandardResolution standard_resolution(const PosetModule& n) {
  const Poset& p = n.poset();
  const FieldSpec& k = n.field();
  const std::size_t top = p.height();

  StandardResolution r;
  for (Element e = 0; e < p.size(); ++e) r.module_dims.push_back(n.dim(e));

  // layouts[d][e]: chains of dimension d with e ≤ min σ.
  std::vector<std::vector<BlockLayout>> layouts(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    r.chains.push_back(all_chains(p, d));
    for (Element e = 0; e < p.size(); ++e) {
      std::vector<Chain> visible;
      for (const Chain& s : r.chains[d])
        if (p.leq(e, s.min())) visible.push_back(s);
      layouts[d].push_back(layout(std::move(visible), [&](const Chain& s) { return n.dim(s.max()); }));
    }
  }

  for (std::size_t d = 0; d <= top; ++d) {
    std::vector<std::size_t> dims;
    for (Element e = 0; e < p.size(); ++e) dims.push_back(layouts[d][e].total);
    // Cover map e ⋖ e' keeps the blocks still visible at e'.
    std::map<Cover, Matrix> maps;
    for (const auto& [e, e2] : p.covers()) {
      const BlockLayout& from = layouts[d][e];
      const BlockLayout& to = layouts[d][e2];
      Matrix proj(k, to.total, from.total);
      for (std::size_t i = 0; i < to.chains.size(); ++i) {
        std::size_t j = from.position.at(to.chains[i]);
        proj.place(to.offsets[i], from.offsets[j], Matrix::identity(k, n.dim(to.chains[i].max())));
      }
      maps.emplace(Cover{e, e2}, std::move(proj));
    }
    r.terms.push_back(PosetModule::unchecked(n.poset_ptr(), k, std::move(dims), std::move(maps)));
  }

  for (std::size_t d = 0; d < top; ++d) {
    std::vector<Matrix> at;
    for (Element e = 0; e < p.size(); ++e) {
      const BlockLayout& src = layouts[d][e];
      const BlockLayout& dst = layouts[d + 1][e];
      Matrix delta(k, dst.total, src.total);
      for (std::size_t t = 0; t < dst.chains.size(); ++t) {
        const Chain& tau = dst.chains[t];
        for (const Facet& f : facets(tau)) {
          auto it = src.position.find(f.face);
          if (it == src.position.end()) continue;
          delta.accumulate(dst.offsets[t], src.offsets[it->second],
                           n.map_between(f.face.max(), tau.max()).scaled(f.sign));
        }
      }
      at.push_back(std::move(delta));
    }
    r.deltas.push_back(std::move(at));
  }

  for (Element e = 0; e < p.size(); ++e) {
    const BlockLayout& l = layouts[0][e];
    Matrix eps(k, l.total, n.dim(e));
    for (std::size_t i = 0; i < l.chains.size(); ++i) eps.place(l.offsets[i], 0, n.map_between(e, l.chains[i].max()));
    r.augmentation.push_back(std::move(eps));
  }
  return r;
}

ExactnessReport check_resolution_exact(const StandardResolution& r) {
  const std::size_t elements = r.module_dims.size();
  auto fail = [](Element e, int degree, std::string why) { return ExactnessReport{false, e, degree, std::move(why)}; };

  for (Element e = 0; e < elements; ++e) {
    const Matrix& eps = r.augmentation[e];
    if (rank(eps) != r.module_dims[e]) return fail(e, -1, "augmentation is not injective");

    std::size_t incoming_rank = rank(eps);
    const Matrix* incoming = &eps;
    for (std::size_t d = 0; d < r.terms.size(); ++d) {
      std::size_t here = r.terms[d].dim(e);
      std::size_t outgoing_rank = 0;
      if (d < r.deltas.size()) {
        const Matrix& out = r.deltas[d][e];
        if (!compose(out, *incoming).is_zero()) return fail(e, static_cast<int>(d), "consecutive maps compose to nonzero");
        outgoing_rank = rank(out);
        incoming = &out;
      }
      if (incoming_rank + outgoing_rank != here) return fail(e, static_cast<int>(d), "kernel differs from image");
      incoming_rank = outgoing_rank;
    }
  }
  return {};
}

ExactnessReport check_resolution_exact(const PosetModule& n) { return check_resolution_exact(standard_resolution(n)); }

}  // namespace mobius
