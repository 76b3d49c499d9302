#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hstab {

enum class CheckStatus { pass, fail, undetermined };

std::string label(CheckStatus s);

/// One re-runnable check: a quoted claim and the value recomputed from
/// scratch, both rendered in the same item-by-item format so the check
/// passes exactly when the two strings agree verbatim.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::fail;
  std::string claimed;
  std::string computed;

  bool passed() const { return status == CheckStatus::pass; }
};

struct RegistryOptions {
  std::uint64_t seed = 0;
  int samples = 10000;
  /// Negative control: corrupts the quoted claims of exactly the checks
  /// S:atom, L:Gm-action and T:maintheorem-E, which must then fail.
  bool tamper = false;
};

/// Runs every registered check and returns the results sorted by id.
/// Randomized checks derive their generator from opts.seed alone, so two
/// runs with equal options produce identical results.
std::vector<CheckResult> run_registry(const RegistryOptions& opts);

/// The ids run_registry produces, sorted ascending.
std::vector<std::string> registry_ids();

/// Glob match with '*' (any substring) and '?' (any character).
bool glob_match(const std::string& pattern, const std::string& text);

/// Keeps the results whose id matches the glob.
std::vector<CheckResult> filter_checks(const std::vector<CheckResult>& checks,
                                       const std::string& pattern);

/// {"seed": ..., "checks": [{"id", "status", "claimed", "computed"}, ...]}
/// with two-space indentation; parsing and re-serializing a report is the
/// identity on its bytes.
std::string report_json(std::uint64_t seed,
                        const std::vector<CheckResult>& checks);
std::vector<CheckResult> parse_report(const std::string& text,
                                      std::uint64_t* seed = nullptr);

}  // namespace hstab
