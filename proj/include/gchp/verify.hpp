#pragma once

// The full verification run behind `gchp verify`: every invariant of the
// library as a named check, each over a set of (nu, xi) parameters.

#include <string>
#include <vector>

#include "gchp/params.hpp"

namespace gchp {

enum class CheckStatus { passed, erratum, failed };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::failed;
  double residual = 0.0;  // worst residual seen (0 means exact agreement)
  std::string note;
  std::string erratum;    // what the corrected form changes, for ERRATUM checks
};

struct VerifyOptions {
  unsigned max_degree = 8;
  std::vector<Params> params_set;  // empty: default_params_set(mode)
  Mode mode = Mode::exact;
  double tolerance = 1e-10;
  bool corrupt = false;            // perturb one coefficient (negative control)
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by name
  std::vector<std::string> errata;  // distinct erratum descriptions
  unsigned max_degree = 0;
  Mode mode = Mode::exact;

  bool passed() const;
  std::size_t count(CheckStatus status) const;
};

/// (1,0), (1,2), (2,1+i), (1/4,-i), (1/2,-i), (4,1+i).
std::vector<Params> default_params_set(Mode mode);

/// Largest supported max_degree.
inline constexpr unsigned max_verify_degree = 10;

/// Runs all checks (in parallel); throws std::invalid_argument for
/// max_degree > max_verify_degree.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace gchp
