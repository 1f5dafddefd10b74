#pragma once

#include "permlab/perm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

/// Parameters of one family U_{A,α}: σ_m (m >= 4) with both designated
/// endpoints inflated by α (|α| = k+1) and every other entry by a member of
/// the antichain A.
struct AntichainSpec {
  int k = 1;
  Permutation alpha;
  std::vector<Permutation> A; // canonical order, deduplicated
  std::optional<Permutation> tau;

  /// Shape checks only (lengths, nonempty A); semantic conditions are
  /// reported by validate_spec.
  static AntichainSpec make(int k, Permutation alpha, std::vector<Permutation> A);
  /// A = A_τ.
  static AntichainSpec from_tau(int k, Permutation tau, Permutation alpha);
  /// U_{{1},12}, the split-end path antichain.
  static AntichainSpec split_end_paths();

  int min_fill_length() const;
  int max_fill_length() const;
  /// Length of the shortest element, 2(k+1) + 2 * min_fill_length().
  int min_element_length() const;
  bool in_A(const Permutation &p) const;

  /// Stable text key built from every parameter.
  std::string fingerprint() const;
};

/// A_τ = {τ} ∪ {π ∈ S_k : τ ≰ π}, canonical order. Requires |τ| = k-1,
/// 3 <= k <= 8.
std::vector<Permutation> make_A_tau(int k, const Permutation &tau);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// A is an antichain; α ∉ A^≤; τ ≰ α when τ is present.
ValidationReport validate_spec(const AntichainSpec &spec);

/// Names one element: the oscillation length and the fills of the non-endpoint
/// entries of σ_m, listed by increasing position.
struct ElementId {
  int m = 4;
  std::vector<Permutation> fills;
  bool operator==(const ElementId &) const = default;
};

/// 0-based positions in σ_m of the two entries inflated by α: the least entry,
/// and the greatest entry (m even) or the rightmost entry (m odd).
std::pair<int, int> endpoint_positions(int m);

Permutation build_element(const AntichainSpec &spec, const ElementId &id);

/// Elements of length exactly n, canonical order.
std::vector<Permutation> elements_of_length(const AntichainSpec &spec, int n);

/// Elements of length exactly n with their ids, sorted by permutation. Not
/// deduplicated: one entry per id.
std::vector<std::pair<ElementId, Permutation>>
identified_elements_of_length(const AntichainSpec &spec, int n);

/// Elements of every length up to n_max, canonical order.
std::vector<Permutation> elements_up_to(const AntichainSpec &spec, int n_max);

struct AntichainReport {
  bool passed = true;
  std::size_t elements = 0;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Permutation, Permutation>> offending;
};

AntichainReport verify_antichain(const AntichainSpec &spec, int n_max);

/// Pairwise incomparability of an explicit list (duplicates count as
/// comparable).
AntichainReport verify_pairwise(const std::vector<Permutation> &family);

} // namespace permlab
