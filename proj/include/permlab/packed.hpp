#pragma once

#include "permlab/perm.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace permlab {

/// Permutations of length <= 16 packed 4 bits per entry (value-1), first entry
/// in the most significant used nibble, so that numeric order equals
/// lexicographic order within one length. The length is not stored; tables
/// keep one layer per length.
using Packed = std::uint64_t;

inline constexpr int kMaxPackedLength = 16;

inline Packed pack(std::span<const int> values) {
  Packed p = 0;
  for (int v : values)
    p = (p << 4) | static_cast<Packed>(v - 1);
  return p;
}

inline Packed pack(const Permutation &pi) { return pack(pi.values()); }

/// Value (1-based) at position i of a packed permutation of length n.
inline int packed_at(Packed p, int n, int i) {
  return static_cast<int>((p >> (4 * (n - 1 - i))) & 0xF) + 1;
}

inline std::vector<int> unpack(Packed p, int n) {
  std::vector<int> v(n);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = static_cast<int>(p & 0xF) + 1;
    p >>= 4;
  }
  return v;
}

inline Permutation unpack_perm(Packed p, int n) {
  return Permutation(unpack(p, n));
}

/// left ⊕ right for packed operands of lengths nl and nr.
inline Packed packed_direct_sum(Packed left, int nl, Packed right, int nr) {
  if (nl == 0)
    return right;
  if (nr == 0)
    return left;
  Packed shifted = 0;
  for (int i = 0; i < nr; ++i)
    shifted |= (((right >> (4 * i)) & 0xF) + static_cast<Packed>(nl)) << (4 * i);
  return (left << (4 * nr)) | shifted;
}

} // namespace permlab
