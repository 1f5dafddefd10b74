#pragma once

#include "permlab/perm.hpp"

#include <span>
#include <string>
#include <vector>

namespace permlab {

/// Contiguous positions start..end (1-based, inclusive) whose values are
/// also contiguous.
struct Interval {
  int start = 0;
  int end = 0;
  int length() const { return end - start + 1; }
  auto operator<=>(const Interval &) const = default;
};

/// Every interval of length 2..n-1, sorted by (start, end).
std::vector<Interval> proper_intervals(const Permutation &pi);

bool is_simple(const Permutation &pi);

/// σ[α₁,…,α_m]: entry i of σ becomes an interval order-isomorphic to blocks[i].
Permutation inflate(const Permutation &quotient,
                    std::span<const Permutation> blocks);

/// Top level of the substitution decomposition.
///
/// For quotients of length >= 4 the blocks are the maximal proper intervals.
/// Sum-decomposable inputs get quotient 12 with the first sum component as the
/// first block and the remainder as the second; skew-decomposable inputs
/// mirror this with quotient 21.
struct Decomposition {
  Permutation quotient;
  std::vector<Permutation> blocks;
  bool operator==(const Decomposition &) const = default;
};

Decomposition simple_quotient(const Permutation &pi);

} // namespace permlab
