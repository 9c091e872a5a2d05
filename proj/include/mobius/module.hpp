#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mobius/field.hpp"
#include "mobius/incidence.hpp"
#include "mobius/matrix.hpp"
#include "mobius/poset.hpp"

namespace mobius {

using Cover = std::pair<Element, Element>;

// A functor from a finite poset to finite-dimensional vector spaces, stored
// as a space per element and a matrix per covering relation a ⋖ b, of shape
// dim(b) x dim(a).
class PosetModule {
 public:
  // Checks shapes only (ShapeMismatch / UnknownElement naming the cover).
  // Covers absent from `maps` get zero matrices.
  static PosetModule unchecked(PosetPtr p, FieldSpec field, std::vector<std::size_t> dims,
                               std::map<Cover, Matrix> maps);
  // As unchecked, then throws FunctorialityError naming the first pair a ≤ b
  // whose saturated chains disagree.
  static PosetModule create(PosetPtr p, FieldSpec field, std::vector<std::size_t> dims,
                            std::map<Cover, Matrix> maps);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim(Element a) const { return dims_.at(a); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;

  const Matrix& cover_map(Element a, Element b) const;
  const std::map<Cover, Matrix>& cover_maps() const { return maps_; }

  // M(a ≤ b) composed along a fixed saturated chain; identity when a = b.
  // Throws NotComparable.
  const Matrix& map_between(Element a, Element b) const;

  friend bool operator==(const PosetModule& x, const PosetModule& y) {
    return *x.poset_ == *y.poset_ && x.field_ == y.field_ && x.dims_ == y.dims_ && x.maps_ == y.maps_;
  }

 private:
  PosetModule() = default;

  PosetPtr poset_;
  FieldSpec field_;
  std::vector<std::size_t> dims_;
  std::map<Cover, Matrix> maps_;
  std::vector<Matrix> along_;  // n*n, filled where a ≤ b
};

inline const Matrix& map_between(const PosetModule& m, Element a, Element b) { return m.map_between(a, b); }

struct FunctorialityReport {
  bool ok = true;
  std::optional<std::pair<Element, Element>> violation;
};

// Path independence over every pair a ≤ b. The first violation is reported
// with b earliest in the linear extension, then a by index.
FunctorialityReport check_functoriality(const PosetModule& m);

PosetModule zero_module(const PosetPtr& p, FieldSpec field = {});
PosetModule constant_module(const PosetPtr& p, std::size_t dim, FieldSpec field = {});
// k^dim on the down-set of a, identity maps inside it, zero elsewhere.
PosetModule principal_cofree(const PosetPtr& p, Element a, std::size_t dim, FieldSpec field = {});
// One-dimensional on the spread Z. Throws NotASpread.
PosetModule indicator(const PosetPtr& p, const ElementSet& z, FieldSpec field = {});
// Blocks in argument order. Throws PosetMismatch / FieldMismatch; needs at least one summand.
PosetModule direct_sum(const std::vector<PosetModule>& summands);

GrFunction dimension_function(const PosetModule& m);

// Basis of the natural transformations M ⇒ N; basis[k][e] is the component at e,
// a dim_N(e) x dim_M(e) matrix.
struct NatSpace {
  std::size_t dimension = 0;
  std::vector<std::vector<Matrix>> basis;
};

// Throws PosetMismatch / FieldMismatch.
NatSpace nat_space(const PosetModule& m, const PosetModule& n);
bool is_natural(const PosetModule& m, const PosetModule& n, const std::vector<Matrix>& eta);

// lim of M over the subposet `index`, as a kernel inside ⊕_{a ∈ index} M(a).
// `basis` has one column per limit dimension; block a starts at offsets[i].
struct LimitPresentation {
  ElementSet index;
  std::vector<std::size_t> offsets;
  std::size_t ambient = 0;
  Matrix basis;
};
LimitPresentation limit_over(const PosetModule& m, const ElementSet& index);

// colim of M over `index`, as a quotient map `quotient` : ⊕_{a ∈ index} M(a) -> colim.
struct ColimitPresentation {
  ElementSet index;
  std::vector<std::size_t> offsets;
  std::size_t ambient = 0;
  Matrix quotient;
};
ColimitPresentation colimit_over(const PosetModule& m, const ElementSet& index);

// (f*N)(a) = N(f(a)).
PosetModule pullback_module(const MonotoneMap& f, const PosetModule& n);
// (f_*M)(x) = lim over {a : f(a) ≥ x}; empty index gives 0.
PosetModule pushforward_module(const MonotoneMap& f, const PosetModule& m);
// (f_†M)(x) = colim over {a : f(a) ≤ x}; empty index gives 0.
PosetModule pushforward_open_module(const MonotoneMap& f, const PosetModule& m);

// Index sets of the two pushforwards at x.
ElementSet upper_fiber(const MonotoneMap& f, Element x);
ElementSet lower_fiber(const MonotoneMap& f, Element x);

}  // namespace mobius
