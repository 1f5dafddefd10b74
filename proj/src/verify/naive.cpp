#include "permlab/verify.hpp"

#include <vector>

namespace permlab::verify {

namespace {

template <class Visit>
void for_each_subset(int n, int k, Visit &&visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  if (k > n)
    return;
  while (true) {
    if (!visit(idx))
      return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i)
      --i;
    if (i < 0)
      return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

bool same_order(const Permutation &host, const Permutation &pattern, const std::vector<int> &idx) {
  const int k = pattern.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if ((host[idx[a]] < host[idx[b]]) != (pattern[a] < pattern[b]))
        return false;
  return true;
}

} // namespace

bool naive_contains(const Permutation &host, const Permutation &pattern) {
  if (pattern.empty())
    return true;
  bool found = false;
  for_each_subset(host.size(), pattern.size(), [&](const std::vector<int> &idx) {
    found = same_order(host, pattern, idx);
    return !found;
  });
  return found;
}

std::size_t naive_occurrences(const Permutation &host, const Permutation &pattern) {
  if (pattern.empty())
    return 1;
  std::size_t count = 0;
  for_each_subset(host.size(), pattern.size(), [&](const std::vector<int> &idx) {
    count += same_order(host, pattern, idx);
    return true;
  });
  return count;
}

} // namespace permlab::verify
