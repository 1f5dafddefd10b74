#include "permlab/perm.hpp"

#include "permlab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

namespace permlab {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int> &v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<int> flatten_values(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    out[order[r]] = static_cast<int>(r) + 1;
  return out;
}

std::vector<int> delete_and_flatten(std::span<const int> values, int pos) {
  std::vector<int> out;
  out.reserve(values.size() - 1);
  const int removed = values[pos];
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (static_cast<int>(i) == pos)
      continue;
    int v = values[i];
    out.push_back(v > removed ? v - 1 : v);
  }
  return out;
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw InvalidInput("not a permutation of 1.." + std::to_string(n) +
                         ": " + str());
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Trusted{});
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = n - i;
  return Permutation(std::move(v), Trusted{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw InvalidInput("cannot parse permutation: '" + std::string(text) + "'");
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::strong_ordering Permutation::operator<=>(const Permutation &rhs) const {
  if (auto c = size() <=> rhs.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(
      values_.begin(), values_.end(), rhs.values_.begin(), rhs.values_.end());
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(p.size());
  for (int x : p.values()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

Permutation flatten(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("flatten: duplicate entries");
  return Permutation(flatten_values(word), Permutation::Trusted{});
}

std::optional<Occurrence> contains(const Permutation &host,
                                   const Permutation &pattern) {
  const int n = host.size();
  const int k = pattern.size();
  if (n > kMaxContainmentHost)
    throw ResourceError("containment host longer than " +
                        std::to_string(kMaxContainmentHost));
  if (k == 0)
    return Occurrence{};
  if (k > n)
    return std::nullopt;

  // below[j] / above[j]: earlier pattern index holding the nearest smaller /
  // larger pattern value, or -1.
  std::vector<int> below(k, -1), above(k, -1);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (pattern[i] < pattern[j] &&
          (below[j] < 0 || pattern[i] > pattern[below[j]]))
        below[j] = i;
      if (pattern[i] > pattern[j] &&
          (above[j] < 0 || pattern[i] < pattern[above[j]]))
        above[j] = i;
    }
  }

  std::vector<int> chosen(k, -1);
  int j = 0;
  int next = 0;
  while (true) {
    bool placed = false;
    for (int pos = next; pos <= n - (k - j); ++pos) {
      const int v = host[pos];
      if (below[j] >= 0 && v < host[chosen[below[j]]])
        continue;
      if (above[j] >= 0 && v > host[chosen[above[j]]])
        continue;
      chosen[j] = pos;
      placed = true;
      break;
    }
    if (placed) {
      if (j == k - 1)
        return Occurrence{std::move(chosen)};
      next = chosen[j] + 1;
      ++j;
      continue;
    }
    // Exhausted this level; resume the previous one just after its choice.
    if (j == 0)
      return std::nullopt;
    --j;
    next = chosen[j] + 1;
    chosen[j] = -1;
  }
}

bool occurrence_is_valid(const Permutation &host, const Permutation &pattern,
                         std::span<const int> positions) {
  if (static_cast<int>(positions.size()) != pattern.size())
    return false;
  std::vector<int> word;
  word.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    int p = positions[i];
    if (p < 0 || p >= host.size())
      return false;
    if (i > 0 && p <= positions[i - 1])
      return false;
    word.push_back(host[p]);
  }
  return flatten_values(word) == std::vector<int>(pattern.values().begin(),
                                                  pattern.values().end());
}

Permutation direct_sum(const Permutation &left, const Permutation &right) {
  std::vector<int> v(left.values().begin(), left.values().end());
  for (int x : right.values())
    v.push_back(x + left.size());
  return Permutation(std::move(v), Permutation::Trusted{});
}

Permutation skew_sum(const Permutation &left, const Permutation &right) {
  std::vector<int> v;
  v.reserve(left.size() + right.size());
  for (int x : left.values())
    v.push_back(x + right.size());
  for (int x : right.values())
    v.push_back(x);
  return Permutation(std::move(v), Permutation::Trusted{});
}

std::vector<Permutation> sum_components(const Permutation &pi) {
  std::vector<Permutation> out;
  int start = 0;
  int max_so_far = 0;
  for (int i = 0; i < pi.size(); ++i) {
    max_so_far = std::max(max_so_far, pi[i]);
    // Prefix 0..i occupies exactly the values 1..i+1.
    if (max_so_far == i + 1) {
      out.push_back(flatten(pi.values().subspan(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Permutation> skew_components(const Permutation &pi) {
  std::vector<Permutation> out;
  const int n = pi.size();
  int start = 0;
  int min_so_far = n + 1;
  for (int i = 0; i < n; ++i) {
    min_so_far = std::min(min_so_far, pi[i]);
    if (min_so_far == n - i) {
      out.push_back(flatten(pi.values().subspan(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return out;
}

bool is_sum_indecomposable(const Permutation &pi) {
  int max_so_far = 0;
  for (int i = 0; i + 1 < pi.size(); ++i) {
    max_so_far = std::max(max_so_far, pi[i]);
    if (max_so_far == i + 1)
      return false;
  }
  return !pi.empty();
}

Permutation delete_entry(const Permutation &pi, int position) {
  if (position < 0 || position >= pi.size())
    throw InvalidInput("delete_entry: position out of range");
  return Permutation(delete_and_flatten(pi.values(), position),
                     Permutation::Trusted{});
}

std::vector<Permutation> patterns_of_length(const Permutation &pi, int length,
                                            const PatternLimits &limits) {
  if (pi.size() > limits.max_length)
    throw ResourceError("patterns: length " + std::to_string(pi.size()) +
                        " above limit " + std::to_string(limits.max_length));
  if (length < 1 || length > pi.size())
    return {};

  using Layer = std::unordered_set<std::vector<int>, VectorHash>;
  Layer layer;
  layer.emplace(pi.values().begin(), pi.values().end());
  for (int len = pi.size(); len > length; --len) {
    Layer next;
    for (const auto &w : layer) {
      for (int pos = 0; pos < len; ++pos) {
        next.insert(delete_and_flatten(w, pos));
        if (next.size() > limits.max_patterns)
          throw ResourceError("patterns: more than " +
                              std::to_string(limits.max_patterns) +
                              " patterns at length " + std::to_string(len - 1));
      }
    }
    layer = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(layer.size());
  for (const auto &w : layer)
    out.push_back(Permutation(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> patterns(const Permutation &pi,
                                  const PatternLimits &limits) {
  if (pi.size() > limits.max_length)
    throw ResourceError("patterns: length " + std::to_string(pi.size()) +
                        " above limit " + std::to_string(limits.max_length));
  using Layer = std::unordered_set<std::vector<int>, VectorHash>;
  std::vector<Permutation> out;
  if (pi.empty())
    return out;
  Layer layer;
  layer.emplace(pi.values().begin(), pi.values().end());
  std::size_t total = 0;
  for (int len = pi.size(); len >= 1; --len) {
    for (const auto &w : layer)
      out.push_back(Permutation(w));
    total += layer.size();
    if (len == 1)
      break;
    Layer next;
    for (const auto &w : layer)
      for (int pos = 0; pos < len; ++pos)
        next.insert(delete_and_flatten(w, pos));
    if (total + next.size() > limits.max_patterns)
      throw ResourceError("patterns: more than " +
                          std::to_string(limits.max_patterns) + " patterns");
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

} // namespace permlab
