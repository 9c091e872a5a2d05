#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mobius {

// Elements are referred to by their index in the poset's element list, which
// is the order of first appearance in the input.
using Element = std::size_t;
using ElementSet = std::vector<Element>;
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxPosetSize = 64;

class Poset {
 public:
  // Reflexive-transitive closure of `pairs` over `elements`. Throws
  // UnknownElement for dangling identifiers or duplicates, CycleError if the
  // closure is not antisymmetric, SizeCap above `max_size` (at most 64).
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs,
                              std::size_t max_size = kMaxPosetSize);
  // Same, with pairs given as indices into `elements`.
  static Poset from_index_relations(std::vector<std::string> elements,
                                    const std::vector<std::pair<Element, Element>>& pairs,
                                    std::size_t max_size = kMaxPosetSize);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element a) const { return names_.at(a); }
  // Throws UnknownElement.
  Element index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_.contains(std::string(name)); }

  bool leq(Element a, Element b) const { return (up_[a] >> b) & 1U; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  // Bitmasks over element indices.
  ElementMask up_set(Element a) const { return up_[a]; }
  ElementMask down_set(Element a) const { return down_[a]; }

  // Covering relations a ⋖ b, sorted by (a, b).
  const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }
  bool is_cover(Element a, Element b) const;
  const std::vector<Element>& lower_covers(Element b) const { return lower_covers_[b]; }
  const std::vector<Element>& upper_covers(Element a) const { return upper_covers_[a]; }

  // Elements sorted so that a < b implies a precedes b; ties by index.
  const std::vector<Element>& linear_extension() const { return linear_extension_; }

  // {b : a ≤ b ≤ c}, ascending. Throws NotComparable unless a ≤ c.
  ElementSet interval(Element a, Element c) const;

  // Dimension of the longest chain (number of elements minus one), 0 when empty.
  std::size_t height() const { return height_; }

  std::string describe() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.names_ == b.names_ && a.up_ == b.up_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementMask> up_;    // up_[a] bit b set iff a ≤ b
  std::vector<ElementMask> down_;  // down_[b] bit a set iff a ≤ b
  std::vector<std::pair<Element, Element>> covers_;
  std::vector<std::vector<Element>> lower_covers_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<Element> linear_extension_;
  std::size_t height_ = 0;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

ElementMask to_mask(const ElementSet& set);
ElementSet from_mask(ElementMask mask);

// Strictly increasing sequence of elements a_0 < ... < a_d.
struct Chain {
  std::vector<Element> vertices;

  std::size_t dim() const { return vertices.size() - 1; }
  Element min() const { return vertices.front(); }
  Element max() const { return vertices.back(); }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

// Chains of dimension d with minimum a, lexicographic by element index.
std::vector<Chain> chains_with_min(const Poset& p, Element a, std::size_t d);
// Chains of dimension d with maximum a, lexicographic by element index.
std::vector<Chain> chains_with_max(const Poset& p, Element a, std::size_t d);
// Union of chains_with_min over a ∈ Z, lexicographic.
std::vector<Chain> chains_with_min_in(const Poset& p, const ElementSet& z, std::size_t d);
// Every d-simplex of the order complex, lexicographic.
std::vector<Chain> all_chains(const Poset& p, std::size_t d);

// Z is convex: a ≤ b ≤ c with a, c ∈ Z forces b ∈ Z.
bool is_spread(const Poset& p, const ElementSet& z);

// A codimension-one face of a chain, with incidence sign (-1)^removed.
struct Facet {
  Chain face;
  int sign;
  std::size_t removed;
};

// All codimension-one faces of tau, ordered by the index of the deleted vertex.
std::vector<Facet> facets(const Chain& tau);
// Faces of tau that keep the minimum a = min tau (vertex 0 is never deleted).
std::vector<Facet> facets_with_min(const Chain& tau, Element a);

bool is_monotone(std::span<const Element> values, const Poset& source, const Poset& target);

class MonotoneMap {
 public:
  // Throws NotMonotone, or UnknownElement when values are out of range or not total.
  MonotoneMap(PosetPtr source, PosetPtr target, std::vector<Element> values);

  static MonotoneMap identity(const PosetPtr& p);
  static MonotoneMap constant(const PosetPtr& source, const PosetPtr& target, Element value);

  Element operator()(Element a) const { return values_[a]; }
  const std::vector<Element>& values() const { return values_; }
  const Poset& source() const { return *source_; }
  const Poset& target() const { return *target_; }
  const PosetPtr& source_ptr() const { return source_; }
  const PosetPtr& target_ptr() const { return target_; }

  // Preimage f^{-1}(y), ascending.
  ElementSet fiber(Element y) const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.values_ == b.values_;
  }

 private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<Element> values_;
};

// outer ∘ inner. Throws PosetMismatch if inner's target is not outer's source.
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

}  // namespace mobius
