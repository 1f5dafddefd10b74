#include "permlab/oscillation.hpp"

#include "permlab/errors.hpp"
#include "permlab/kernels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace permlab {

std::vector<int> oscillating_prefix(int length) {
  if (length < 1)
    throw InvalidInput("oscillating_prefix: length must be >= 1");
  std::vector<int> out(length);
  for (int i = 0; i < length; ++i)
    out[i] = (i % 2 == 0) ? i + 4 : i;
  return out;
}

Permutation sigma(int m) {
  if (m < 4)
    throw InvalidInput("sigma: m must be >= 4, got " + std::to_string(m));
  if (m % 2 == 0)
    return flatten(oscillating_prefix(m));
  auto seq = oscillating_prefix(2 * m + 4);
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  const int threshold = sorted[m - 1];
  std::vector<int> kept;
  for (int v : seq)
    if (v <= threshold)
      kept.push_back(v);
  return flatten(kept);
}

OscillationFamily increasing_oscillations(int m, int prefix_length) {
  if (m < 1)
    throw InvalidInput("increasing_oscillations: m must be >= 1");
  if (prefix_length == 0)
    prefix_length = 2 * m + 4;

  static std::mutex mu;
  static std::map<std::pair<int, int>, OscillationFamily> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({m, prefix_length}); it != memo.end())
      return it->second;
  }

  // The inversion graph of the sequence is a path, so the sum indecomposable
  // patterns are exactly the contiguous runs of path vertices.
  std::set<Permutation> found;
  for (int first = 0;; ++first) {
    if (kernels::path_vertex_position(first) >= prefix_length &&
        kernels::path_vertex_position(first + 1) >= prefix_length)
      break;
    std::vector<std::pair<int, int>> entries; // (position, value)
    bool inside = true;
    for (int t = first; t < first + m && inside; ++t) {
      inside = kernels::path_vertex_position(t) < prefix_length;
      entries.emplace_back(kernels::path_vertex_position(t), kernels::path_vertex_value(t));
    }
    if (!inside)
      continue;
    std::sort(entries.begin(), entries.end());
    std::vector<int> values;
    for (const auto &e : entries)
      values.push_back(e.second);
    found.insert(flatten(values));
  }
  OscillationFamily fam{m, std::vector<Permutation>(found.begin(), found.end())};

  std::lock_guard lock(mu);
  memo.emplace(std::pair{m, prefix_length}, fam);
  return fam;
}

bool is_increasing_oscillation(const Permutation &pi) {
  if (pi.empty())
    return false;
  const auto fam = increasing_oscillations(pi.size());
  return std::binary_search(fam.variants.begin(), fam.variants.end(), pi);
}

const char *to_string(DeletionTag tag) {
  switch (tag) {
  case DeletionTag::ShrinksToOscillation:
    return "shrinks-to-oscillation";
  case DeletionTag::Decomposes:
    return "decomposes";
  case DeletionTag::Neither:
    return "neither";
  }
  return "?";
}

std::vector<DeletionTag> deletion_classify(const Permutation &osc) {
  if (!is_increasing_oscillation(osc))
    throw InvalidInput("deletion_classify: not an increasing oscillation: " +
                       osc.str());
  std::vector<DeletionTag> tags;
  if (osc.size() == 1)
    return {DeletionTag::ShrinksToOscillation};
  for (int pos = 0; pos < osc.size(); ++pos) {
    const Permutation rest = delete_entry(osc, pos);
    if (is_increasing_oscillation(rest))
      tags.push_back(DeletionTag::ShrinksToOscillation);
    else if (!is_sum_indecomposable(rest))
      tags.push_back(DeletionTag::Decomposes);
    else
      tags.push_back(DeletionTag::Neither);
  }
  return tags;
}

} // namespace permlab
