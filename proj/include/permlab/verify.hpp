#pragma once

#include "permlab/antichain.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace permlab::verify {

/// Subsequence containment by enumerating every position subset of the host.
/// Exponential; only meant as an independent reference for small hosts.
bool naive_contains(const Permutation &host, const Permutation &pattern);

/// Number of pattern occurrences, counted over all position subsets.
std::size_t naive_occurrences(const Permutation &host, const Permutation &pattern);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  int k = 3;
  Permutation tau = Permutation({2, 1});
  Permutation alpha = Permutation({1, 2, 3, 4});
  int max_len = 14;
  /// Closure tables are persisted here and shared between criteria; empty
  /// selects a directory under the system temporary path.
  std::string cache_dir;
  /// Run only these criteria (all when empty).
  std::set<int> only;
  std::uint64_t seed = 20240611;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult &)> on_result;
};

inline constexpr int kCriterionCount = 11;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options);

/// "criterion  3 PASS  antichain generating function (0.12 s): detail"
std::string format_line(const CriterionResult &r, bool with_time = true);

} // namespace permlab::verify
