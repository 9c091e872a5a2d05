#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mobius/io.hpp"

namespace mobius {

struct SelftestOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::size_t jobs = 1;
};

struct BatteryResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // first few failing instances
  double seconds = 0;

  bool ok() const { return passed == total; }
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<BatteryResult> batteries;

  bool passed() const;
};

// Random-property battery: Möbius oracle agreement, inversion identities,
// Euler-characteristic checks over QQ and GF(7), spread Euler formula,
// resolution exactness and adjunction dimensions (one instance each per
// trial), plus the Rota and functor-equality checks over the poset catalog.
// trials == 0 runs nothing.
SelftestReport run_selftest(const SelftestOptions& options);

// Deterministic for a fixed seed; timings are included only when asked.
io::Json selftest_to_json(const SelftestReport& report, bool with_timings = false);

}  // namespace mobius
