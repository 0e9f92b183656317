#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copoly/rodrigues.hpp"

#include <json.hpp>

namespace copoly {

enum class Suite { recursion, ode, functional, genfun, oracle };

std::string_view to_string(Suite suite);
/// "all" expands to every suite. Throws InvalidParameter.
std::vector<Suite> parse_suites(std::string_view text);

struct SuiteResult {
  Suite suite = Suite::recursion;
  bool passed = true;
  std::size_t checks = 0;
  /// First failing grid point in (n, nu) order.
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::size_t max_n = 8;
  std::size_t order = 12;
  std::vector<Suite> suites = {Suite::recursion, Suite::ode, Suite::functional, Suite::genfun,
                               Suite::oracle};
  bool parallel = true;
};

struct VerifyReport {
  std::string family;
  ParamMap params;
  std::size_t max_n = 0;
  std::size_t order = 0;
  std::vector<SuiteResult> suites;
  bool passed = true;
  double elapsed_ms = 0;
};

/// Moments the suites can touch for a given grid, used as the eager
/// admissibility range.
std::size_t required_moment_order(const VerifyOptions& options);

/// Builds the pair and runs the selected suites. Construction errors
/// (InvalidParameter, AdmissibilityViolation) propagate to the caller.
VerifyReport run_verification(const FamilySpec& family, const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace copoly
