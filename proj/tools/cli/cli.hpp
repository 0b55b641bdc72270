#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grovesim/grover.hpp"

namespace grovesim::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResourceLimit = 3,
  kIoError = 4,
};

enum class Format { Json, Csv, Text };

inline constexpr std::uint64_t kDefaultShots = 1024;
inline constexpr std::uint64_t kDefaultSeed = 42;
/// Overrides kDefaultSeed when set; the effective seed is always echoed.
inline constexpr const char* kSeedEnv = "GROVESIM_SEED";

struct RunConfig {
  Pattern pattern = Pattern::all_ones(5);
  /// Empty means "auto": optimal_rotations(pattern.size()).
  std::optional<std::size_t> rotations;
  OracleStyle style = OracleStyle::VOracle;
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::Json;
};

std::size_t resolve_rotations(const RunConfig& config);

/// {pattern, qubits, ancilla_qubits, rotations, style, shots, seed, exact, counts}.
/// `exact` lists every search outcome; `counts` only outcomes drawn at least
/// once, and is empty when shots == 0.
nlohmann::json run_report(const RunConfig& config);

/// {qubits, rows: [{k, probability}]}.
nlohmann::json analytic_report(std::size_t n, std::size_t max_k);

/// {pattern, qubits, style, shots, seed, tolerance, passed, rows: [{k,
/// derived, exact, sampled, exact_deviation, sampled_deviation}]}. `sampled`
/// and `sampled_deviation` are null when shots == 0.
nlohmann::json compare_report(const Pattern& pattern, std::size_t max_k, OracleStyle style,
                              std::uint64_t shots, std::uint64_t seed);

/// {pattern, qubits, oracle, distribution, modal, modal_probability,
/// runner_up_probability, detected, verdict}. A null style means the oracle
/// is replaced by the identity.
nlohmann::json phase_check_report(const Pattern& pattern, std::optional<OracleStyle> style);

std::string render(const nlohmann::json& report, const std::string& command, Format format);

/// Full command-line entry point. Never throws; returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grovesim::cli
