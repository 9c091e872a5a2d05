#include "mobius/galois.hpp"

#include <sstream>

#include "mobius/errors.hpp"

namespace mobius {

namespace {

void require_opposed(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.source() == g.target()) || !(f.target() == g.source()))
    throw PosetMismatch("maps do not form a pair P -> Q -> P");
}

// Betti vectors of complexes truncated at different heights compare equal
// when they agree up to trailing zeros.
std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string to_string(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

ConnectionCheck verify_connection(const MonotoneMap& f, const MonotoneMap& g) {
  require_opposed(f, g);
  const Poset& p = f.source();
  const Poset& q = f.target();
  for (Element a = 0; a < p.size(); ++a)
    for (Element x = 0; x < q.size(); ++x)
      if (q.leq(f(a), x) != p.leq(a, g(x))) return {false, std::make_pair(a, x)};
  return {};
}

GaloisConnection::GaloisConnection(MonotoneMap left, MonotoneMap right)
    : left_(std::move(left)), right_(std::move(right)) {
  auto check = verify_connection(left_, right_);
  if (!check.ok) {
    auto [a, x] = *check.witness;
    throw NotAdjoint("not a Galois connection: f(" + left_.source().name(a) + ") <= " + left_.target().name(x) +
                      " and " + left_.source().name(a) + " <= g(" + left_.target().name(x) + ") disagree");
  }
}

std::vector<MonotoneMap> enumerate_monotone_maps(const PosetPtr& p, const PosetPtr& q) {
  std::vector<MonotoneMap> out;
  const std::size_t n = p->size();
  if (q->size() == 0) {
    if (n == 0) out.emplace_back(p, q, std::vector<Element>{});
    return out;
  }
  // Digit-vector iteration in index order; prune as soon as an assigned pair
  // among the first i elements breaks monotonicity.
  std::vector<Element> values(n, 0);
  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (p->leq(j, i) && !q->leq(values[j], values[i])) return false;
      if (p->leq(i, j) && !q->leq(values[i], values[j])) return false;
    }
    return true;
  };
  std::size_t i = 0;
  if (n == 0) {
    out.emplace_back(p, q, values);
    return out;
  }
  values[0] = 0;
  while (true) {
    if (consistent(i)) {
      if (i + 1 == n) {
        out.emplace_back(p, q, values);
      } else {
        values[++i] = 0;
        continue;
      }
    }
    while (values[i] + 1 == q->size()) {
      if (i == 0) return out;
      --i;
    }
    ++values[i];
  }
}

std::vector<GaloisConnection> enumerate_connections(const PosetPtr& p, const PosetPtr& q, std::size_t cap) {
  if (p->size() > cap || q->size() > cap)
    throw SizeCap("Galois enumeration is capped at " + std::to_string(cap) + " elements per poset");
  std::vector<GaloisConnection> out;
  for (const MonotoneMap& f : enumerate_monotone_maps(p, q)) {
    // g(x) must generate {a : f(a) ≤ x} as a principal down-set; try each a.
    std::vector<Element> g(q->size());
    bool found_all = true;
    for (Element x = 0; x < q->size() && found_all; ++x) {
      ElementMask wanted = 0;
      for (Element a = 0; a < p->size(); ++a)
        if (q->leq(f(a), x)) wanted |= ElementMask{1} << a;
      bool found = false;
      for (Element a = 0; a < p->size(); ++a)
        if (p->down_set(a) == wanted) {
          g[x] = a;
          found = true;
          break;
        }
      found_all = found;
    }
    if (!found_all) continue;
    if (!is_monotone(g, *q, *p)) continue;
    MonotoneMap right(q, p, std::move(g));
    if (verify_connection(f, right).ok) out.emplace_back(f, std::move(right));
  }
  return out;
}

bool CheckReport::passed() const {
  for (const auto& item : items)
    if (!item.equal) return false;
  return true;
}

void CheckReport::add(std::string label, const Integer& lhs, const Integer& rhs) {
  items.push_back({std::move(label), lhs.get_str(), rhs.get_str(), lhs == rhs});
}

void CheckReport::add(std::string label, std::string lhs, std::string rhs, bool equal) {
  items.push_back({std::move(label), std::move(lhs), std::move(rhs), equal});
}

void CheckReport::append(const CheckReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

CheckReport check_functor_equalities(const GaloisConnection& c, const PosetModule& n_on_q, const PosetModule& m_on_p) {
  const MonotoneMap& f = c.left();
  const MonotoneMap& g = c.right();
  const Poset& p = c.source();
  const Poset& q = c.target();
  CheckReport report;

  // f*N against g_*N on P.
  PosetModule pulled = pullback_module(f, n_on_q);
  PosetModule pushed = pushforward_module(g, n_on_q);
  for (Element a = 0; a < p.size(); ++a) {
    const std::string at = "pullback-vs-pushforward@" + p.name(a);
    report.add(at + ":dim", static_cast<unsigned long>(pulled.dim(a)), static_cast<unsigned long>(pushed.dim(a)));
    LimitPresentation lim = limit_over(n_on_q, upper_fiber(g, a));
    std::size_t slot = 0;
    while (slot < lim.index.size() && lim.index[slot] != f(a)) ++slot;
    bool ok = false;
    if (slot < lim.index.size()) {
      std::vector<std::size_t> rows;
      for (std::size_t k = 0; k < n_on_q.dim(f(a)); ++k) rows.push_back(lim.offsets[slot] + k);
      ok = is_invertible(lim.basis.select_rows(rows));
    }
    report.add(at + ":comparison-invertible", "true", ok ? "true" : "false", ok);
  }

  // f_†M against g*M on Q.
  PosetModule open = pushforward_open_module(f, m_on_p);
  PosetModule back = pullback_module(g, m_on_p);
  for (Element x = 0; x < q.size(); ++x) {
    const std::string at = "open-pushforward-vs-pullback@" + q.name(x);
    report.add(at + ":dim", static_cast<unsigned long>(open.dim(x)), static_cast<unsigned long>(back.dim(x)));
    ColimitPresentation colim = colimit_over(m_on_p, lower_fiber(f, x));
    std::size_t slot = 0;
    while (slot < colim.index.size() && colim.index[slot] != g(x)) ++slot;
    bool ok = false;
    if (slot < colim.index.size()) {
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k < m_on_p.dim(g(x)); ++k) cols.push_back(colim.offsets[slot] + k);
      ok = is_invertible(colim.quotient.select_cols(cols));
    }
    report.add(at + ":comparison-invertible", "true", ok ? "true" : "false", ok);
  }
  return report;
}

CheckReport rota_classical_check(const GaloisConnection& c) {
  const MonotoneMap& f = c.left();
  const MonotoneMap& g = c.right();
  const Poset& p = c.source();
  const Poset& q = c.target();
  IncidenceFunction mu_p = mobius_recursive(f.source_ptr());
  IncidenceFunction mu_q = mobius_recursive(f.target_ptr());
  CheckReport report;
  for (Element a = 0; a < p.size(); ++a)
    for (Element y = 0; y < q.size(); ++y) {
      Integer lhs = 0, rhs = 0;
      for (Element x : g.fiber(a)) lhs += mu_q.value_or_zero(x, y);
      for (Element b : f.fiber(y)) rhs += mu_p.value_or_zero(a, b);
      report.add("rota@(" + p.name(a) + "," + q.name(y) + ")", lhs, rhs);
    }
  return report;
}

CheckReport rota_inversion_check(const GaloisConnection& c, const GrFunction& n) {
  const MonotoneMap& f = c.left();
  const MonotoneMap& g = c.right();
  GrFunction lhs = upper_inversion(pullback_fn(f, n));
  GrFunction rhs = pushforward_fn(g, upper_inversion(n));
  CheckReport report;
  for (Element a = 0; a < c.source().size(); ++a)
    report.add("rota-inversion@" + c.source().name(a), lhs(a), rhs(a));
  return report;
}

CheckReport rota_ext_check(const GaloisConnection& c, const PosetModule& n_on_q, Element a) {
  const MonotoneMap& f = c.left();
  const MonotoneMap& g = c.right();
  const std::string at = "@" + c.source().name(a);

  ElementSet z = g.fiber(a);
  if (!is_spread(c.target(), z)) throw NotASpread("preimage of " + c.source().name(a) + " under g is not a spread");

  GrFunction n = dimension_function(n_on_q);
  PosetModule pulled = pullback_module(f, n_on_q);

  Integer inverted_pullback = upper_inversion(pullback_fn(f, n))(a);
  CohomologyResult on_p = mobius_cohomology(a, pulled);
  CohomologyResult on_q = cohomology(hom_complex(z, n_on_q));
  Integer pushed_inversion = pushforward_fn(g, upper_inversion(n))(a);

  CheckReport report;
  report.add("inversion-vs-euler-pullback" + at, inverted_pullback, on_p.euler);
  report.add("euler-pullback-vs-euler-spread" + at, on_p.euler, on_q.euler);
  report.add("euler-spread-vs-pushed-inversion" + at, on_q.euler, pushed_inversion);
  auto betti_p = trimmed(on_p.betti);
  auto betti_q = trimmed(on_q.betti);
  report.add("betti-pullback-vs-betti-spread" + at, to_string(betti_p), to_string(betti_q), betti_p == betti_q);
  return report;
}

CheckReport adjunction_dim_check(const MonotoneMap& f, const PosetModule& m_on_p, const PosetModule& n_on_q) {
  CheckReport report;
  std::size_t left = nat_space(pushforward_open_module(f, m_on_p), n_on_q).dimension;
  std::size_t right = nat_space(m_on_p, pullback_module(f, n_on_q)).dimension;
  report.add("open-pushforward-left-adjoint", static_cast<unsigned long>(left), static_cast<unsigned long>(right));
  left = nat_space(pullback_module(f, n_on_q), m_on_p).dimension;
  right = nat_space(n_on_q, pushforward_module(f, m_on_p)).dimension;
  report.add("pushforward-right-adjoint", static_cast<unsigned long>(left), static_cast<unsigned long>(right));
  return report;
}

}  // namespace mobius
