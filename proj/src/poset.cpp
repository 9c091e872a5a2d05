#include "mobius/poset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mobius/errors.hpp"

namespace mobius {

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& pairs,
                            std::size_t max_size) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], i).second) throw UnknownElement("duplicate element '" + elements[i] + "'");

  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw UnknownElement("relation references unknown element '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<Element, Element>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) idx.emplace_back(lookup(a), lookup(b));
  return from_index_relations(std::move(elements), idx, max_size);
}

Poset Poset::from_index_relations(std::vector<std::string> elements,
                                  const std::vector<std::pair<Element, Element>>& pairs, std::size_t max_size) {
  const std::size_t n = elements.size();
  if (n > std::min(max_size, kMaxPosetSize))
    throw SizeCap("poset has " + std::to_string(n) + " elements, cap is " +
                  std::to_string(std::min(max_size, kMaxPosetSize)));

  Poset p;
  p.names_ = std::move(elements);
  for (Element i = 0; i < n; ++i)
    if (!p.index_.emplace(p.names_[i], i).second) throw UnknownElement("duplicate element '" + p.names_[i] + "'");

  p.up_.assign(n, 0);
  for (Element i = 0; i < n; ++i) p.up_[i] |= ElementMask{1} << i;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw UnknownElement("relation index out of range");
    p.up_[a] |= ElementMask{1} << b;
  }
  // Warshall closure on bit rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if ((p.up_[i] >> k) & 1U) p.up_[i] |= p.up_[k];

  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        throw CycleError("order relation has a cycle through '" + p.names_[a] + "' and '" + p.names_[b] + "'");

  p.down_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (p.leq(a, b)) p.down_[b] |= ElementMask{1} << a;

  p.lower_covers_.assign(n, {});
  p.upper_covers_.assign(n, {});
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!p.lt(a, b)) continue;
      ElementMask strictly_between = (p.up_[a] & p.down_[b]) & ~(ElementMask{1} << a) & ~(ElementMask{1} << b);
      if (strictly_between == 0) {
        p.covers_.emplace_back(a, b);
        p.upper_covers_[a].push_back(b);
        p.lower_covers_[b].push_back(a);
      }
    }
  }

  p.linear_extension_.resize(n);
  for (Element i = 0; i < n; ++i) p.linear_extension_[i] = i;
  std::stable_sort(p.linear_extension_.begin(), p.linear_extension_.end(), [&](Element a, Element b) {
    return std::popcount(p.down_[a]) < std::popcount(p.down_[b]);
  });

  std::vector<std::size_t> longest(n, 0);
  for (Element b : p.linear_extension_) {
    for (Element a : p.lower_covers_[b]) longest[b] = std::max(longest[b], longest[a] + 1);
    p.height_ = std::max(p.height_, longest[b]);
  }
  return p;
}

Element Poset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw UnknownElement("unknown element '" + std::string(name) + "'");
  return it->second;
}

bool Poset::is_cover(Element a, Element b) const {
  const auto& up = upper_covers_[a];
  return std::find(up.begin(), up.end(), b) != up.end();
}

ElementSet Poset::interval(Element a, Element c) const {
  if (!leq(a, c)) throw NotComparable("'" + names_[a] + "' is not below '" + names_[c] + "'");
  return from_mask(up_[a] & down_[c]);
}

std::string Poset::describe() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < covers_.size(); ++i)
    os << (i ? ", " : "") << names_[covers_[i].first] << "<" << names_[covers_[i].second];
  os << "}";
  return os.str();
}

ElementMask to_mask(const ElementSet& set) {
  ElementMask m = 0;
  for (Element e : set) m |= ElementMask{1} << e;
  return m;
}

ElementSet from_mask(ElementMask mask) {
  ElementSet out;
  while (mask) {
    out.push_back(static_cast<Element>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

namespace {

// Extends `prefix` upward by `remaining` strictly larger elements.
void extend_up(const Poset& p, std::vector<Element>& prefix, std::size_t remaining, std::vector<Chain>& out) {
  if (remaining == 0) {
    out.push_back(Chain{prefix});
    return;
  }
  Element top = prefix.back();
  ElementMask above = p.up_set(top) & ~(ElementMask{1} << top);
  for (Element b : from_mask(above)) {
    prefix.push_back(b);
    extend_up(p, prefix, remaining - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Chain> chains_with_min(const Poset& p, Element a, std::size_t d) {
  std::vector<Chain> out;
  if (d > p.height()) return out;
  std::vector<Element> prefix{a};
  extend_up(p, prefix, d, out);
  return out;
}

std::vector<Chain> chains_with_max(const Poset& p, Element a, std::size_t d) {
  std::vector<Chain> out;
  if (d > p.height()) return out;
  ElementMask below = p.down_set(a) & ~(ElementMask{1} << a);
  for (Element b : from_mask(below)) {
    if (d == 0) break;
    std::vector<Element> prefix{b};
    std::vector<Chain> partial;
    extend_up(p, prefix, d - 1, partial);
    for (auto& c : partial)
      if (p.lt(c.max(), a)) {
        c.vertices.push_back(a);
        out.push_back(std::move(c));
      }
  }
  if (d == 0) out.push_back(Chain{{a}});
  return out;
}

std::vector<Chain> chains_with_min_in(const Poset& p, const ElementSet& z, std::size_t d) {
  std::vector<Chain> out;
  for (Element a : from_mask(to_mask(z))) {
    auto part = chains_with_min(p, a, d);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Chain> all_chains(const Poset& p, std::size_t d) {
  ElementSet everything(p.size());
  for (Element i = 0; i < p.size(); ++i) everything[i] = i;
  return chains_with_min_in(p, everything, d);
}

bool is_spread(const Poset& p, const ElementSet& z) {
  ElementMask zm = to_mask(z);
  for (Element a : z)
    for (Element c : z)
      if (p.leq(a, c) && ((p.up_set(a) & p.down_set(c)) & ~zm) != 0) return false;
  return true;
}

std::vector<Facet> facets(const Chain& tau) {
  std::vector<Facet> out;
  if (tau.vertices.size() < 2) return out;
  for (std::size_t i = 0; i < tau.vertices.size(); ++i) {
    Chain face;
    face.vertices.reserve(tau.vertices.size() - 1);
    for (std::size_t j = 0; j < tau.vertices.size(); ++j)
      if (j != i) face.vertices.push_back(tau.vertices[j]);
    out.push_back({std::move(face), (i % 2 == 0) ? 1 : -1, i});
  }
  return out;
}

std::vector<Facet> facets_with_min(const Chain& tau, Element a) {
  std::vector<Facet> out;
  if (tau.vertices.empty() || tau.min() != a) return out;
  for (auto& f : facets(tau))
    if (f.removed != 0) out.push_back(std::move(f));
  return out;
}

bool is_monotone(std::span<const Element> values, const Poset& source, const Poset& target) {
  if (values.size() != source.size()) return false;
  for (Element v : values)
    if (v >= target.size()) return false;
  for (const auto& [a, b] : source.covers())
    if (!target.leq(values[a], values[b])) return false;
  return true;
}

MonotoneMap::MonotoneMap(PosetPtr source, PosetPtr target, std::vector<Element> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() != source_->size())
    throw UnknownElement("map is not total: " + std::to_string(values_.size()) + " values for " +
                         std::to_string(source_->size()) + " elements");
  for (Element v : values_)
    if (v >= target_->size()) throw UnknownElement("map value out of range");
  for (const auto& [a, b] : source_->covers())
    if (!target_->leq(values_[a], values_[b]))
      throw NotMonotone("map is not monotone on " + source_->name(a) + " <= " + source_->name(b));
}

MonotoneMap MonotoneMap::identity(const PosetPtr& p) {
  std::vector<Element> v(p->size());
  for (Element i = 0; i < v.size(); ++i) v[i] = i;
  return MonotoneMap(p, p, std::move(v));
}

MonotoneMap MonotoneMap::constant(const PosetPtr& source, const PosetPtr& target, Element value) {
  return MonotoneMap(source, target, std::vector<Element>(source->size(), value));
}

ElementSet MonotoneMap::fiber(Element y) const {
  ElementSet out;
  for (Element a = 0; a < values_.size(); ++a)
    if (values_[a] == y) out.push_back(a);
  return out;
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  if (!(inner.target() == outer.source())) throw PosetMismatch("cannot compose maps: posets do not match");
  std::vector<Element> v(inner.source().size());
  for (Element a = 0; a < v.size(); ++a) v[a] = outer(inner(a));
  return MonotoneMap(inner.source_ptr(), outer.target_ptr(), std::move(v));
}

}  // namespace mobius
