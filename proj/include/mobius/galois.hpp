#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mobius/cohomology.hpp"
#include "mobius/incidence.hpp"
#include "mobius/module.hpp"
#include "mobius/poset.hpp"

namespace mobius {

// Adjoint pair f : P ⇄ Q : g with f(a) ≤ x ⟺ a ≤ g(x).
class GaloisConnection {
 public:
  // Throws PosetMismatch if the maps do not run P -> Q -> P, and NotAdjoint
  // naming a witness pair if adjointness fails.
  GaloisConnection(MonotoneMap left, MonotoneMap right);

  const MonotoneMap& left() const { return left_; }
  const MonotoneMap& right() const { return right_; }
  const Poset& source() const { return left_.source(); }
  const Poset& target() const { return left_.target(); }

 private:
  MonotoneMap left_;
  MonotoneMap right_;
};

struct ConnectionCheck {
  bool ok = true;
  std::optional<std::pair<Element, Element>> witness;  // (a ∈ P, x ∈ Q)
};

// Exhaustive check of f(a) ≤ x ⟺ a ≤ g(x). Throws PosetMismatch.
ConnectionCheck verify_connection(const MonotoneMap& f, const MonotoneMap& g);

inline constexpr std::size_t kEnumerationCap = 6;

// All Galois connections P ⇄ Q, ordered by the left adjoint's value vector.
// Throws SizeCap above `cap` elements on either side.
std::vector<GaloisConnection> enumerate_connections(const PosetPtr& p, const PosetPtr& q,
                                                    std::size_t cap = kEnumerationCap);

// Every monotone map P -> Q, lexicographic in the value vector.
std::vector<MonotoneMap> enumerate_monotone_maps(const PosetPtr& p, const PosetPtr& q);

// One compared quantity; `equal` is lhs == rhs.
struct CheckItem {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool equal;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool passed() const;
  void add(std::string label, const Integer& lhs, const Integer& rhs);
  void add(std::string label, std::string lhs, std::string rhs, bool equal);
  void append(const CheckReport& other);
};

// f*N ≅ g_*N (projection of the limit onto the f(a) component) and
// f_†M ≅ g*M (injection of the g(x) component into the colimit).
CheckReport check_functor_equalities(const GaloisConnection& c, const PosetModule& n_on_q,
                                     const PosetModule& m_on_p);

// Σ_{x: g(x)=a} μ_Q[x,y] = Σ_{b: f(b)=y} μ_P[a,b] over all (a, y).
CheckReport rota_classical_check(const GaloisConnection& c);

// ∂_P(f^# n) = g_#(∂_Q n) pointwise.
CheckReport rota_inversion_check(const GaloisConnection& c, const GrFunction& n);

// The four-way equality (∂_P f^# n)(a) = χ(1_a, f*N) = χ(1_Z, N) = (g_# ∂_Q n)(a)
// with Z = g^{-1}(a), plus per-degree equality of the two cohomologies.
CheckReport rota_ext_check(const GaloisConnection& c, const PosetModule& n_on_q, Element a);

// dim Nat(f_†M, N) = dim Nat(M, f*N) and dim Nat(f*N, M) = dim Nat(N, f_*M).
CheckReport adjunction_dim_check(const MonotoneMap& f, const PosetModule& m_on_p, const PosetModule& n_on_q);

}  // namespace mobius
