#pragma once

#include <vector>

#include "mobius/field.hpp"
#include "mobius/poset.hpp"

namespace mobius {

// Integer-valued function on the intervals [a, b], a ≤ b, of a poset.
class IncidenceFunction {
 public:
  explicit IncidenceFunction(PosetPtr p);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }

  // Throws NotComparable unless a ≤ b.
  const Integer& operator()(Element a, Element b) const;
  void set(Element a, Element b, Integer value);
  // Zero off the intervals.
  Integer value_or_zero(Element a, Element b) const;

  friend bool operator==(const IncidenceFunction& x, const IncidenceFunction& y) {
    return *x.poset_ == *y.poset_ && x.values_ == y.values_;
  }

 private:
  PosetPtr poset_;
  std::vector<Integer> values_;
};

// Integer-valued function on the elements of a poset (a dimension function
// when nonnegative).
class GrFunction {
 public:
  explicit GrFunction(PosetPtr p) : poset_(std::move(p)), values_(poset_->size()) {}
  GrFunction(PosetPtr p, std::vector<Integer> values);

  // 1 at y, 0 elsewhere.
  static GrFunction delta(PosetPtr p, Element y);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const Integer& operator()(Element a) const { return values_.at(a); }
  void set(Element a, Integer v) { values_.at(a) = std::move(v); }
  const std::vector<Integer>& values() const { return values_; }

  friend bool operator==(const GrFunction& x, const GrFunction& y) {
    return *x.poset_ == *y.poset_ && x.values_ == y.values_;
  }

 private:
  PosetPtr poset_;
  std::vector<Integer> values_;
};

IncidenceFunction zeta(const PosetPtr& p);
IncidenceFunction identity_one(const PosetPtr& p);

// (α∗β)[a,c] = Σ_{a≤b≤c} α[a,b] β[b,c]. Throws PosetMismatch.
IncidenceFunction convolve(const IncidenceFunction& alpha, const IncidenceFunction& beta);

// Inverse of zeta by the interval recursion μ[a,c] = -Σ_{a≤b<c} μ[a,b],
// intervals processed by increasing cardinality.
IncidenceFunction mobius_recursive(const PosetPtr& p);

// μ[a,b] = Σ_{i>0} (-1)^i n_i with n_i the number of chains a = x_0 < ... < x_i = b.
IncidenceFunction mobius_hall(const PosetPtr& p);

// ∂f(a) = Σ_{b≥a} f(b) μ[a,b].
GrFunction upper_inversion(const GrFunction& f);
GrFunction upper_inversion(const GrFunction& f, const IncidenceFunction& mu);
// ∂₋f(a) = Σ_{b≤a} f(b) μ[b,a].
GrFunction lower_inversion(const GrFunction& f);
GrFunction lower_inversion(const GrFunction& f, const IncidenceFunction& mu);

// f_# m(z) = Σ_{a ∈ f^{-1}(z)} m(a).
GrFunction pushforward_fn(const MonotoneMap& f, const GrFunction& m);
// f^# n(a) = n(f(a)).
GrFunction pullback_fn(const MonotoneMap& f, const GrFunction& n);

}  // namespace mobius
