#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mobius::cli {

enum class Command { mobius, invert, cohomology, euler_check, resolution_check, galois_check, enumerate_galois, selftest, help };
enum class Format { table, json };

// Stable process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;

struct RunConfig {
  Command command = Command::help;
  std::vector<std::string> inputs;
  Format format = Format::table;

  std::optional<std::string> at;
  std::optional<std::string> spread;  // comma-separated element names
  bool lower = false;
  bool homology = false;

  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::size_t max_size = 6;
  std::size_t jobs = 1;
  bool timings = false;

  // galois-check
  std::optional<std::string> f_path;
  std::optional<std::string> g_path;
  bool rota = false;
  std::optional<std::string> rota_inversion;
  std::optional<std::string> rota_ext;
  std::vector<std::string> adjunctions;          // module on P, module on Q
  std::vector<std::string> functor_equalities;   // module on Q, module on P

  std::string help_text;
};

// Throws UsageError with a one-line hint. `env_seed` is the value of
// MOBIUS_SEED, used when --seed is absent.
RunConfig parse_args(const std::vector<std::string>& args, const std::optional<std::string>& env_seed = std::nullopt);

// Loads inputs, runs the command and writes its report. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with the exit-code contract (usage errors give 2).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mobius::cli
