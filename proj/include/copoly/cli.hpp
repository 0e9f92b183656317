#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "copoly/rodrigues.hpp"

#include <json.hpp>

namespace copoly::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kCounterexample = 1, kInvalidInput = 2 };

/// Complementary table (or one row of it) with its eigenvalues.
struct ComputeResult {
  FamilySpec family;
  std::size_t n = 0;
  std::optional<std::size_t> nu;
  std::vector<RPoly> rows;  // all rows 0..n, or only row nu
  Rational lambda;
  std::vector<Rational> mu;  // mu_{n,nu} matching rows
};

ComputeResult compute(const FamilySpec& family, std::size_t n, std::optional<std::size_t> nu = {});

/// { "family", "params", "n", "rows": [[...]], "lambda", "mu": [[...]] } and
/// "nu" when a single row was requested. mu holds one list for the single n.
nlohmann::json to_json(const ComputeResult& r);
std::string to_text(const ComputeResult& r);
std::string to_latex(const ComputeResult& r);

/// Cap on series order from COPOLY_MAX_ORDER (default 16). Throws
/// InvalidParameter when the variable is set but not a positive integer.
std::size_t series_order_cap();

/// Runs one invocation, args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copoly::cli
