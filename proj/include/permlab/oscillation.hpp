#pragma once

#include "permlab/perm.hpp"

#include <vector>

namespace permlab {

/// First `length` terms of 4,1,6,3,8,5,...
std::vector<int> oscillating_prefix(int length);

/// σ_m for m >= 4: the first m terms (m even) or the m least terms by value
/// (m odd) of the increasing oscillating sequence, flattened.
Permutation sigma(int m);

/// The increasing oscillations of one length: sum-indecomposable patterns of
/// the increasing oscillating sequence.
struct OscillationFamily {
  int length = 0;
  std::vector<Permutation> variants;
};

/// Patterns are taken from a prefix of 2m+4 terms unless `prefix_length` is
/// given explicitly (used to check that the truncation is stable).
OscillationFamily increasing_oscillations(int m, int prefix_length = 0);

bool is_increasing_oscillation(const Permutation &pi);

enum class DeletionTag { ShrinksToOscillation, Decomposes, Neither };

const char *to_string(DeletionTag tag);

/// Outcome of deleting each entry (by position) of an increasing oscillation.
/// Deleting the only entry of "1" leaves the empty permutation, which is
/// tagged as a shrink.
std::vector<DeletionTag> deletion_classify(const Permutation &osc);

} // namespace permlab
