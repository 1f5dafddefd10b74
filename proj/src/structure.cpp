#include "permlab/structure.hpp"

#include "permlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace permlab {

std::vector<Interval> proper_intervals(const Permutation &pi) {
  const int n = pi.size();
  std::vector<Interval> out;
  for (int a = 0; a < n; ++a) {
    int lo = pi[a], hi = pi[a];
    for (int b = a + 1; b < n; ++b) {
      lo = std::min(lo, pi[b]);
      hi = std::max(hi, pi[b]);
      const int len = b - a + 1;
      if (len == n)
        break;
      if (hi - lo + 1 == len)
        out.push_back({a + 1, b + 1});
    }
  }
  return out;
}

bool is_simple(const Permutation &pi) { return proper_intervals(pi).empty(); }

Permutation inflate(const Permutation &quotient,
                    std::span<const Permutation> blocks) {
  const int m = quotient.size();
  if (static_cast<int>(blocks.size()) != m)
    throw InvalidInput("inflate: " + std::to_string(blocks.size()) +
                       " blocks for a quotient of length " + std::to_string(m));
  for (const auto &b : blocks)
    if (b.empty())
      throw InvalidInput("inflate: empty block");

  // base[i]: values below block i = total length of blocks whose quotient
  // value is smaller.
  std::vector<int> by_value(m);
  for (int i = 0; i < m; ++i)
    by_value[quotient[i] - 1] = i;
  std::vector<int> base(m);
  int acc = 0;
  for (int v = 0; v < m; ++v) {
    base[by_value[v]] = acc;
    acc += blocks[by_value[v]].size();
  }
  std::vector<int> out;
  out.reserve(acc);
  for (int i = 0; i < m; ++i)
    for (int x : blocks[i].values())
      out.push_back(base[i] + x);
  return Permutation(std::move(out));
}

Decomposition simple_quotient(const Permutation &pi) {
  if (pi.empty())
    throw InvalidInput("simple_quotient: empty permutation");
  const int n = pi.size();
  if (n == 1)
    return {pi, {pi}};

  auto sum = sum_components(pi);
  if (sum.size() > 1) {
    std::vector<int> rest(pi.values().begin() + sum[0].size(), pi.values().end());
    return {Permutation({1, 2}), {sum[0], flatten(rest)}};
  }
  auto skew = skew_components(pi);
  if (skew.size() > 1) {
    std::vector<int> rest(pi.values().begin() + skew[0].size(), pi.values().end());
    return {Permutation({2, 1}), {skew[0], flatten(rest)}};
  }

  // Both sum and skew indecomposable: the maximal proper intervals are
  // disjoint and cover every position once singletons are added.
  auto intervals = proper_intervals(pi);
  std::vector<int> block_end(n);
  std::iota(block_end.begin(), block_end.end(), 0);
  for (const auto &iv : intervals)
    block_end[iv.start - 1] = std::max(block_end[iv.start - 1], iv.end - 1);

  std::vector<Permutation> blocks;
  std::vector<int> representatives;
  int pos = 0;
  while (pos < n) {
    const int end = block_end[pos];
    blocks.push_back(flatten(pi.values().subspan(pos, end - pos + 1)));
    representatives.push_back(pi[pos]);
    pos = end + 1;
  }
  return {flatten(representatives), std::move(blocks)};
}

} // namespace permlab
