#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

/// A permutation of {1..n} in one-line notation. Immutable once built.
///
/// Ordering is by length first, then lexicographic on values; this is the
/// canonical order used for every emitted list and set file.
class Permutation {
public:
  Permutation() = default;

  /// Throws InvalidInput unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  /// Parses "3 1 4 2" (commas are accepted as separators too).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 0-based position `i`.
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }

  /// Space-separated text form.
  std::string str() const;

  bool operator==(const Permutation &) const = default;
  std::strong_ordering operator<=>(const Permutation &rhs) const;

private:
  struct Trusted {};
  Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}
  friend Permutation flatten(std::span<const int> word);
  friend Permutation direct_sum(const Permutation &, const Permutation &);
  friend Permutation skew_sum(const Permutation &, const Permutation &);
  friend Permutation delete_entry(const Permutation &, int);

  std::vector<int> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

/// The permutation order-isomorphic to a word of distinct integers.
Permutation flatten(std::span<const int> word);

/// Positions (0-based, strictly increasing) of a pattern occurrence in a host.
struct Occurrence {
  std::vector<int> positions;
  bool operator==(const Occurrence &) const = default;
};

/// Hosts longer than this are refused by `contains`.
inline constexpr int kMaxContainmentHost = 64;

/// Lexicographically least occurrence of `pattern` in `host`, if any.
///
/// Backtracking over pattern entries left to right; every placed entry narrows
/// the admissible value window of later entries to lie between the host values
/// of its nearest already-placed neighbours in pattern-value order.
std::optional<Occurrence> contains(const Permutation &host,
                                   const Permutation &pattern);

inline bool is_contained(const Permutation &pattern, const Permutation &host) {
  return contains(host, pattern).has_value();
}

/// True iff host values at `positions` flatten to `pattern`.
bool occurrence_is_valid(const Permutation &host, const Permutation &pattern,
                         std::span<const int> positions);

/// left ⊕ right.
Permutation direct_sum(const Permutation &left, const Permutation &right);
/// left ⊖ right.
Permutation skew_sum(const Permutation &left, const Permutation &right);

/// The maximal decomposition into sum-indecomposable components.
std::vector<Permutation> sum_components(const Permutation &pi);
/// The maximal decomposition into skew-indecomposable components.
std::vector<Permutation> skew_components(const Permutation &pi);

bool is_sum_indecomposable(const Permutation &pi);

/// Removes the entry at a 0-based position and flattens.
Permutation delete_entry(const Permutation &pi, int position);

struct PatternLimits {
  int max_length = 64;
  std::size_t max_patterns = 5'000'000;
};

/// Every σ ≤ π with |σ| ≥ 1, in canonical order.
///
/// Computed one deleted entry at a time with deduplication of the flattened
/// results at each length, so the cost tracks the number of distinct patterns.
std::vector<Permutation> patterns(const Permutation &pi,
                                  const PatternLimits &limits = {});

/// The patterns of π of exactly `length` entries, in canonical order.
std::vector<Permutation> patterns_of_length(const Permutation &pi, int length,
                                            const PatternLimits &limits = {});

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace permlab
