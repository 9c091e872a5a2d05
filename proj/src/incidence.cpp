#include "mobius/incidence.hpp"

#include <algorithm>
#include <bit>

#include "mobius/errors.hpp"

namespace mobius {

IncidenceFunction::IncidenceFunction(PosetPtr p) : poset_(std::move(p)), values_(poset_->size() * poset_->size()) {}

const Integer& IncidenceFunction::operator()(Element a, Element b) const {
  if (!poset_->leq(a, b))
    throw NotComparable("[" + poset_->name(a) + ", " + poset_->name(b) + "] is not an interval");
  return values_[a * poset_->size() + b];
}

void IncidenceFunction::set(Element a, Element b, Integer value) {
  if (!poset_->leq(a, b))
    throw NotComparable("[" + poset_->name(a) + ", " + poset_->name(b) + "] is not an interval");
  values_[a * poset_->size() + b] = std::move(value);
}

Integer IncidenceFunction::value_or_zero(Element a, Element b) const {
  return poset_->leq(a, b) ? values_[a * poset_->size() + b] : Integer(0);
}

GrFunction::GrFunction(PosetPtr p, std::vector<Integer> values) : poset_(std::move(p)), values_(std::move(values)) {
  if (values_.size() != poset_->size())
    throw ShapeMismatch("function has " + std::to_string(values_.size()) + " values for " +
                        std::to_string(poset_->size()) + " elements");
}

GrFunction GrFunction::delta(PosetPtr p, Element y) {
  GrFunction f(std::move(p));
  f.set(y, 1);
  return f;
}

IncidenceFunction zeta(const PosetPtr& p) {
  IncidenceFunction z(p);
  for (Element a = 0; a < p->size(); ++a)
    for (Element b : from_mask(p->up_set(a))) z.set(a, b, 1);
  return z;
}

IncidenceFunction identity_one(const PosetPtr& p) {
  IncidenceFunction one(p);
  for (Element a = 0; a < p->size(); ++a) one.set(a, a, 1);
  return one;
}

IncidenceFunction convolve(const IncidenceFunction& alpha, const IncidenceFunction& beta) {
  if (!(alpha.poset() == beta.poset())) throw PosetMismatch("convolution of functions on different posets");
  const Poset& p = alpha.poset();
  IncidenceFunction out(alpha.poset_ptr());
  for (Element a = 0; a < p.size(); ++a)
    for (Element c : from_mask(p.up_set(a))) {
      Integer sum = 0;
      for (Element b : p.interval(a, c)) sum += alpha(a, b) * beta(b, c);
      out.set(a, c, std::move(sum));
    }
  return out;
}

IncidenceFunction mobius_recursive(const PosetPtr& p) {
  IncidenceFunction mu(p);
  for (Element a = 0; a < p->size(); ++a) {
    ElementSet tops = from_mask(p->up_set(a));
    std::stable_sort(tops.begin(), tops.end(), [&](Element x, Element y) {
      return std::popcount(p->up_set(a) & p->down_set(x)) < std::popcount(p->up_set(a) & p->down_set(y));
    });
    for (Element c : tops) {
      if (c == a) {
        mu.set(a, a, 1);
        continue;
      }
      Integer sum = 0;
      for (Element b : p->interval(a, c))
        if (b != c) sum += mu(a, b);
      mu.set(a, c, -sum);
    }
  }
  return mu;
}

IncidenceFunction mobius_hall(const PosetPtr& p) {
  const std::size_t n = p->size();
  IncidenceFunction mu(p);
  for (Element a = 0; a < n; ++a) {
    // ending[c] = number of chains of the current length from a to c.
    std::vector<Integer> ending(n), total(n);
    ending[a] = 1;
    for (std::size_t len = 1; len <= p->height(); ++len) {
      std::vector<Integer> next(n);
      for (Element c = 0; c < n; ++c)
        for (Element b = 0; b < n; ++b)
          if (ending[b] != 0 && p->lt(b, c)) next[c] += ending[b];
      ending = std::move(next);
      for (Element c = 0; c < n; ++c) total[c] += (len % 2 == 0) ? ending[c] : Integer(-ending[c]);
    }
    for (Element c : from_mask(p->up_set(a))) mu.set(a, c, c == a ? Integer(1) : total[c]);
  }
  return mu;
}

GrFunction upper_inversion(const GrFunction& f) { return upper_inversion(f, mobius_recursive(f.poset_ptr())); }

GrFunction upper_inversion(const GrFunction& f, const IncidenceFunction& mu) {
  const Poset& p = f.poset();
  if (!(p == mu.poset())) throw PosetMismatch("inversion with a Möbius function of another poset");
  GrFunction out(f.poset_ptr());
  for (Element a = 0; a < p.size(); ++a) {
    Integer sum = 0;
    for (Element b : from_mask(p.up_set(a))) sum += f(b) * mu(a, b);
    out.set(a, std::move(sum));
  }
  return out;
}

GrFunction lower_inversion(const GrFunction& f) { return lower_inversion(f, mobius_recursive(f.poset_ptr())); }

GrFunction lower_inversion(const GrFunction& f, const IncidenceFunction& mu) {
  const Poset& p = f.poset();
  if (!(p == mu.poset())) throw PosetMismatch("inversion with a Möbius function of another poset");
  GrFunction out(f.poset_ptr());
  for (Element a = 0; a < p.size(); ++a) {
    Integer sum = 0;
    for (Element b : from_mask(p.down_set(a))) sum += f(b) * mu(b, a);
    out.set(a, std::move(sum));
  }
  return out;
}

GrFunction pushforward_fn(const MonotoneMap& f, const GrFunction& m) {
  if (!(f.source() == m.poset())) throw PosetMismatch("function is not defined on the map's source");
  GrFunction out(f.target_ptr());
  for (Element a = 0; a < f.source().size(); ++a) out.set(f(a), out(f(a)) + m(a));
  return out;
}

GrFunction pullback_fn(const MonotoneMap& f, const GrFunction& n) {
  if (!(f.target() == n.poset())) throw PosetMismatch("function is not defined on the map's target");
  GrFunction out(f.source_ptr());
  for (Element a = 0; a < f.source().size(); ++a) out.set(a, n(f(a)));
  return out;
}

}  // namespace mobius
