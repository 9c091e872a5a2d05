#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mobius/module.hpp"

namespace mobius {

// Finite cochain complex C^0 -> C^1 -> ... -> C^D. Coordinates of C^d are
// grouped in blocks, one per chain in labels[d], each of the size of the
// module value that chain indexes.
struct CochainComplex {
  FieldSpec field;
  std::vector<std::size_t> dims;
  std::vector<Matrix> deltas;  // deltas[d] : C^d -> C^{d+1}, d < dims.size() - 1
  std::vector<std::vector<Chain>> labels;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  // δ^{d+1} ∘ δ^d = 0 for every d.
  bool is_complex() const;
};

// Chain complex C_D -> ... -> C_0 with boundaries[d - 1] : C_d -> C_{d-1}.
struct ChainComplex {
  FieldSpec field;
  std::vector<std::size_t> dims;
  std::vector<Matrix> boundaries;
  std::vector<std::vector<Chain>> labels;

  bool is_complex() const;
};

struct CohomologyResult {
  std::vector<std::size_t> betti;
  Integer euler;

  friend bool operator==(const CohomologyResult&, const CohomologyResult&) = default;
};

// Throws NotAComplex.
CohomologyResult cohomology(const CochainComplex& c);
CohomologyResult homology(const ChainComplex& c);

// Σ (-1)^d dim C^d.
Integer euler_poincare(const CochainComplex& c);

// Hom(1_Z, F^• N) in coordinates: a block N(max σ) per chain σ with min σ ∈ Z,
// coboundary blocks [τ:σ]·N(max σ ≤ max τ). Throws NotASpread.
CochainComplex hom_complex(const ElementSet& z, const PosetModule& n);

// Cohomology of hom_complex({a}, N).
CohomologyResult mobius_cohomology(Element a, const PosetModule& n);

// The dual complex: a block N(min σ) per chain σ with max σ = a, boundary
// blocks [τ:σ]·N(min τ ≤ min σ).
ChainComplex mobius_homology_complex(Element a, const PosetModule& n);
CohomologyResult mobius_homology(Element a, const PosetModule& n);

// χ(1_Z, N) from the cohomology of hom_complex(Z, N). Throws NotASpread.
Integer euler_characteristic(const ElementSet& z, const PosetModule& n);
// Σ_{d≥0} (-1)^d Σ_{dim σ = d, min σ ∈ Z} dim N(max σ), by counting chains only.
Integer euler_chain_sum(const ElementSet& z, const PosetModule& n);

struct EulerCheckItem {
  Element element;
  Integer inversion;  // upper Möbius inversion of the dimension function
  Integer euler;      // χ of the Möbius cohomology
  bool ok;
};

// Compares ∂n(a) with χ(1_a, N) at every element.
std::vector<EulerCheckItem> euler_check(const PosetModule& n);

// The standard cofree resolution 0 -> N -> F^0 N -> F^1 N -> ... -> F^D N -> 0.
// F^d N is the product over d-chains σ of principal cofree modules on min σ
// with fibre N(max σ); at element e its coordinates are the blocks of chains
// with e ≤ min σ, in canonical chain order.
struct StandardResolution {
  std::vector<PosetModule> terms;
  std::vector<std::vector<Chain>> chains;
  std::vector<std::vector<Matrix>> deltas;  // deltas[d][e] : F^d N(e) -> F^{d+1} N(e)
  std::vector<Matrix> augmentation;         // augmentation[e] : N(e) -> F^0 N(e)
  std::vector<std::size_t> module_dims;     // dim N(e)
};

StandardResolution standard_resolution(const PosetModule& n);

struct ExactnessReport {
  bool ok = true;
  std::optional<Element> element;
  // -1 for the slot N(e) (injectivity of the augmentation), d for F^d N(e).
  std::optional<int> degree;
  std::string reason;
};

// Pointwise exactness of the resolution at every element and slot.
ExactnessReport check_resolution_exact(const StandardResolution& r);
ExactnessReport check_resolution_exact(const PosetModule& n);

}  // namespace mobius
