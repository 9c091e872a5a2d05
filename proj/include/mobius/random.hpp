#pragma once

#include <cstdint>
#include <vector>

#include "mobius/field.hpp"
#include "mobius/incidence.hpp"
#include "mobius/module.hpp"
#include "mobius/poset.hpp"

namespace mobius {

// SplitMix64 (Steele, Lea & Flood). Every random draw in the library goes
// through this generator so results are reproducible from a single seed on
// any platform; std distributions are avoided because their output is
// implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }
  // An independent stream.
  SplitMix64 fork() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

// Element names: "a".."z" while they last, then "e26", "e27", ...
std::vector<std::string> element_names(std::size_t n);

// n elements in shuffled index order, each pair related with probability
// num/den before closure.
Poset random_poset(SplitMix64& rng, std::size_t n, std::uint64_t num = 1, std::uint64_t den = 2);

// Functorial module with dimensions uniform in [0, max_dim]. Elements are
// visited along a linear extension; at each element the maps from its lower
// covers are a random point of the solution space of the commutativity
// constraints against everything already built. Deterministic per seed.
PosetModule random_module(const PosetPtr& p, FieldSpec field, std::size_t max_dim, std::uint64_t seed);

GrFunction random_gr_function(const PosetPtr& p, SplitMix64& rng, std::int64_t lo, std::int64_t hi);

// Convex hull of a random subset; never empty for a nonempty poset.
ElementSet random_spread(const Poset& p, SplitMix64& rng);

// Values assigned along a linear extension, each drawn from the targets
// above every value already forced from below; falls back to a constant map
// into a maximal element if a draw gets stuck.
MonotoneMap random_monotone_map(SplitMix64& rng, const PosetPtr& source, const PosetPtr& target);

}  // namespace mobius
