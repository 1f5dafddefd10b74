#pragma once

// Hot loops of the library. Every kernel has an OpenMP version (the one the
// library calls) and a plain serial version with the same contract, kept as the
// reference the tests and benchmarks compare against.

#include "permlab/packed.hpp"
#include "permlab/perm.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace permlab::kernels {

/// Upper bound on worker threads for every parallel kernel; 0 restores the
/// OpenMP default.
void set_thread_count(int threads);
int thread_count();

using IndexPair = std::pair<std::size_t, std::size_t>;

/// First pair (i < j) in row-major order whose members are comparable under
/// containment (equal members count as comparable).
std::optional<IndexPair> first_comparable_pair(const std::vector<Permutation> &family);
std::optional<IndexPair> first_comparable_pair_serial(const std::vector<Permutation> &family);

/// Sorted, deduplicated one-point deletions of a layer of length-n packed
/// permutations (n >= 2).
std::vector<Packed> deletion_layer(const std::vector<Packed> &layer, int n);
std::vector<Packed> deletion_layer_serial(const std::vector<Packed> &layer, int n);

/// Length-(n+1) members of Av(basis) obtained by inserting a new entry into
/// every length-n member of `layer`, sorted and deduplicated. `layer` must
/// be the complete length-n layer of the class.
std::vector<Packed> extend_avoiders(const std::vector<Packed> &layer, int n,
                                    const std::vector<Permutation> &basis);
std::vector<Packed> extend_avoiders_serial(const std::vector<Packed> &layer, int n,
                                           const std::vector<Permutation> &basis);

/// True iff the packed permutation `host` of length n contains `pattern`.
bool packed_contains(Packed host, int n, const Permutation &pattern);

// --- closure of an inflated oscillation family -----------------------------
//
// Every pattern of an element is the restriction of its oscillation skeleton
// to some set of entries, with each kept entry replaced by a nonempty pattern
// of its block. A skeleton key records such a restriction, which of its
// entries are the two anchor entries (inflated by the anchor permutation in
// every element) and the least skeleton length m that realises it.

struct SkeletonKey {
  Packed skeleton = 0;
  int length = 0;
  std::uint32_t anchor_mask = 0; // bit i: skeleton entry i is an anchor
  int m = 0;
  /// Path vertices (bit t: vertex t of the oscillation's inversion path,
  /// starting from the least entry) of one realisation with this m.
  std::uint64_t vertices = 0;
  bool operator==(const SkeletonKey &) const = default;
  auto operator<=>(const SkeletonKey &) const = default;
};

/// One way to fill a kept entry: a pattern together with the number of
/// entries the smallest host block containing it adds over the shortest
/// block.
struct BlockOption {
  Packed pattern = 0;
  int length = 0;
  int extra = 0;
};

struct ClosureProblem {
  int max_pattern_length = 0;    // n_max
  int max_skeleton_length = 0;   // largest m whose shortest element fits
  int anchor_length = 0;         // |α|
  int min_fill_length = 0;       // shortest member of the antichain
  int max_element_length = 0;    // cutoff
  std::vector<BlockOption> anchor_options;
  std::vector<BlockOption> fill_options;
  std::size_t memory_budget_bytes = std::size_t(2) << 30;
  std::uint64_t max_search_leaves = 200'000'000;

  /// Length of the shortest element built on σ_m.
  int base_length(int m) const {
    return 2 * anchor_length + (m - 2) * min_fill_length;
  }
};

/// All skeleton keys with at most max_pattern_length entries whose least m is
/// at most max_skeleton_length, sorted.
std::vector<SkeletonKey> skeleton_keys(const ClosureProblem &problem);
std::vector<SkeletonKey> skeleton_keys_serial(const ClosureProblem &problem);

/// Per-length layers (index n, 1 <= n <= max_pattern_length) of every
/// inflation of a key whose element-length bound fits in max_element_length;
/// each layer sorted and deduplicated. Throws ResourceError when buffered
/// output would exceed the memory budget.
std::vector<std::vector<Packed>> inflate_keys(const ClosureProblem &problem,
                                              const std::vector<SkeletonKey> &keys);
std::vector<std::vector<Packed>> inflate_keys_serial(const ClosureProblem &problem,
                                                     const std::vector<SkeletonKey> &keys);

/// A key together with the option chosen for each of its entries.
struct Derivation {
  std::uint32_t key = 0;
  std::array<std::uint16_t, kMaxPackedLength> options{}; // first key.length used
  auto operator<=>(const Derivation &) const = default;
};

/// For each target (sorted, all of length n) the least derivation, in
/// (key, options) order, whose inflation equals it; nullopt where none exists.
std::vector<std::optional<Derivation>>
find_derivations(const ClosureProblem &problem, const std::vector<SkeletonKey> &keys,
                 int n, const std::vector<Packed> &targets);

/// Path vertex t: value and position (0-based) in the increasing oscillating
/// sequence 4,1,6,3,8,5,...
int path_vertex_value(int t);
int path_vertex_position(int t);

/// Inflation of a packed skeleton by packed blocks.
Packed packed_inflate(Packed skeleton, int length, const Packed *blocks,
                      const int *block_lengths);

/// Sorts and deduplicates in place.
void sort_unique(std::vector<Packed> &v);

} // namespace permlab::kernels
