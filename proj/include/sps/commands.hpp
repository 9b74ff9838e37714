#pragma once

#include "sps/oracle_verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sps {

/// Exit status shared by every command.
enum ExitCode : int { kExitZero = 0, kExitNonzero = 1, kExitError = 2 };

struct PitOptions {
  std::string path;
  bool exact_oracle = false;
  std::optional<std::string> kronecker_degree;
  bool timings = true;
};

struct BoundsOptions {
  std::string path;
  bool exact_sumsets = true;
  /// Empty means SPS_MAX_SUMSET, or the library default when that is unset.
  std::optional<std::size_t> sumset_cap;
  bool timings = true;
};

struct VerifyOptions {
  /// Ignored when `pw` is set.
  std::string path;
  std::uint64_t seed = 0;
  std::size_t max_expand = kDefaultExpandCap;
  std::optional<unsigned> pw;
  bool timings = true;
};

/// Each command writes one JSON report to `out` and diagnostics to `err`.
/// pit: 0 zero, 1 nonzero, 2 error. bounds: 0 or 2.
/// verify: 0 all checks consistent, 1 an inconsistency was found, 2 error.
int run_pit(const PitOptions& options, std::ostream& out, std::ostream& err);
int run_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

/// Sumset cap from SPS_MAX_SUMSET, else kDefaultSumsetCap. Throws
/// InvalidArgument for a malformed value.
std::size_t sumset_cap_from_env();

}  // namespace sps
