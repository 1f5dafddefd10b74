#include "permlab/kernels.hpp"

#include "permlab/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <unordered_map>

namespace permlab::kernels {

namespace {
int g_threads = 0;

int effective_threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }
} // namespace

void set_thread_count(int threads) { g_threads = std::max(0, threads); }
int thread_count() { return effective_threads(); }

void sort_unique(std::vector<Packed> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// ---------------------------------------------------------------------------

namespace {

bool comparable(const Permutation &a, const Permutation &b) {
  if (a.size() == b.size())
    return a == b;
  return a.size() < b.size() ? is_contained(a, b) : is_contained(b, a);
}

} // namespace

std::optional<IndexPair> first_comparable_pair_serial(const std::vector<Permutation> &family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (comparable(family[i], family[j]))
        return IndexPair{i, j};
  return std::nullopt;
}

std::optional<IndexPair> first_comparable_pair(const std::vector<Permutation> &family) {
  const std::size_t n = family.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  const long long rows = static_cast<long long>(n);

#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_threads())
  for (long long ii = 0; ii < rows; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t code = i * n + j;
      std::size_t cur = best.load(std::memory_order_relaxed);
      if (code >= cur)
        break;
      if (comparable(family[i], family[j])) {
        while (code < cur && !best.compare_exchange_weak(cur, code)) {
        }
        break;
      }
    }
  }
  const std::size_t code = best.load();
  if (code == none)
    return std::nullopt;
  return IndexPair{code / n, code % n};
}

// ---------------------------------------------------------------------------

namespace {

// Deletes position i of a packed length-n permutation and flattens.
Packed packed_delete(Packed p, int n, int i) {
  const int removed = packed_at(p, n, i);
  Packed out = 0;
  for (int j = 0; j < n; ++j) {
    if (j == i)
      continue;
    int v = packed_at(p, n, j);
    if (v > removed)
      --v;
    out = (out << 4) | static_cast<Packed>(v - 1);
  }
  return out;
}

// Inserts a new maximum n+1 before position i.
Packed packed_insert_max(Packed p, int n, int i) {
  const Packed low_mask = (n - i) == 0 ? 0 : (Packed(1) << (4 * (n - i))) - 1;
  const Packed low = p & low_mask;
  const Packed high = p >> (4 * (n - i));
  return (((high << 4) | static_cast<Packed>(n)) << (4 * (n - i))) | low;
}

} // namespace

std::vector<Packed> deletion_layer_serial(const std::vector<Packed> &layer, int n) {
  std::vector<Packed> out;
  out.reserve(layer.size() * 2);
  for (Packed p : layer)
    for (int i = 0; i < n; ++i)
      out.push_back(packed_delete(p, n, i));
  sort_unique(out);
  return out;
}

std::vector<Packed> deletion_layer(const std::vector<Packed> &layer, int n) {
  const int threads = effective_threads();
  std::vector<std::vector<Packed>> parts(threads);
  const long long size = static_cast<long long>(layer.size());
#pragma omp parallel num_threads(threads)
  {
    auto &mine = parts[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long long idx = 0; idx < size; ++idx) {
      for (int i = 0; i < n; ++i)
        mine.push_back(packed_delete(layer[idx], n, i));
      if (mine.size() > (std::size_t(1) << 22))
        sort_unique(mine);
    }
    sort_unique(mine);
  }
  std::vector<Packed> out;
  for (auto &part : parts)
    out.insert(out.end(), part.begin(), part.end());
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------------------

bool packed_contains(Packed host, int n, const Permutation &pattern) {
  return is_contained(pattern, unpack_perm(host, n));
}

namespace {

bool avoids_all(Packed p, int n, const std::vector<Permutation> &basis) {
  const Permutation host = unpack_perm(p, n);
  for (const auto &b : basis)
    if (b.size() <= n && is_contained(b, host))
      return false;
  return true;
}

} // namespace

std::vector<Packed> extend_avoiders_serial(const std::vector<Packed> &layer, int n,
                                           const std::vector<Permutation> &basis) {
  if (n + 1 > kMaxPackedLength)
    throw ResourceError("avoiders: packed layers are limited to length 16");
  std::vector<Packed> out;
  for (Packed p : layer)
    for (int i = 0; i <= n; ++i) {
      const Packed q = packed_insert_max(p, n, i);
      if (avoids_all(q, n + 1, basis))
        out.push_back(q);
    }
  sort_unique(out);
  return out;
}

std::vector<Packed> extend_avoiders(const std::vector<Packed> &layer, int n,
                                    const std::vector<Permutation> &basis) {
  if (n + 1 > kMaxPackedLength)
    throw ResourceError("avoiders: packed layers are limited to length 16");
  const int threads = effective_threads();
  std::vector<std::vector<Packed>> parts(threads);
  const long long size = static_cast<long long>(layer.size());
#pragma omp parallel num_threads(threads)
  {
    auto &mine = parts[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 256)
    for (long long idx = 0; idx < size; ++idx)
      for (int i = 0; i <= n; ++i) {
        const Packed q = packed_insert_max(layer[idx], n, i);
        if (avoids_all(q, n + 1, basis))
          mine.push_back(q);
      }
  }
  std::vector<Packed> out;
  for (auto &part : parts)
    out.insert(out.end(), part.begin(), part.end());
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------------------

Packed packed_inflate(Packed skeleton, int length, const Packed *blocks,
                      const int *block_lengths) {
  std::array<int, kMaxPackedLength + 1> len_by_value{};
  std::array<int, kMaxPackedLength> value{};
  for (int i = 0; i < length; ++i) {
    value[i] = packed_at(skeleton, length, i);
    len_by_value[value[i]] = block_lengths[i];
  }
  std::array<int, kMaxPackedLength + 2> offset{};
  for (int v = 1; v <= length; ++v)
    offset[v + 1] = offset[v] + len_by_value[v];
  Packed out = 0;
  for (int i = 0; i < length; ++i) {
    const int L = block_lengths[i];
    const Packed base = static_cast<Packed>(offset[value[i]]);
    for (int j = L - 1; j >= 0; --j)
      out = (out << 4) | (((blocks[i] >> (4 * j)) & 0xF) + base);
  }
  return out;
}

namespace {

// Path vertex t of the inversion graph of the increasing oscillating sequence:
// values 1,4,3,6,5,8,7,...; value v sits at position v-4 (v even) or v (v odd).
int vertex_value(int t) { return t == 0 ? 1 : (t % 2 == 1 ? t + 3 : t + 1); }
int vertex_position(int t) {
  const int v = vertex_value(t);
  return v % 2 == 0 ? v - 4 : v;
}

} // namespace

int path_vertex_value(int t) { return vertex_value(t); }
int path_vertex_position(int t) { return vertex_position(t); }

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<Packed, std::uint64_t> &k) const noexcept {
    std::uint64_t h = k.first * 0x9E3779B97F4A7C15ull;
    h ^= k.second + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct Realisation {
  int m = 0;
  std::uint64_t vertices = 0;
  bool better_than(const Realisation &o) const {
    return m != o.m ? m < o.m : vertices < o.vertices;
  }
};

using KeyMap = std::unordered_map<std::pair<Packed, std::uint64_t>, Realisation, KeyHash>;

void offer(KeyMap &map, const std::pair<Packed, std::uint64_t> &key, const Realisation &r) {
  auto [it, inserted] = map.try_emplace(key, r);
  if (!inserted && r.better_than(it->second))
    it->second = r;
}

// Secondary key word: length in bits 0..7, anchor mask above.
std::uint64_t key_word(int length, std::uint32_t mask) {
  return static_cast<std::uint64_t>(length) | (static_cast<std::uint64_t>(mask) << 8);
}

class KeySearch {
public:
  KeySearch(const ClosureProblem &p, KeyMap &out) : p_(p), out_(out) {}

  void run_from(int first) {
    chosen_[0] = first;
    count_ = 1;
    descend();
  }

  void run_from_pair(int first, int second) {
    chosen_[0] = first;
    chosen_[1] = second;
    count_ = 2;
    descend();
  }

private:
  void record(std::uint32_t anchor_bits_first, bool last_is_anchor, int m) {
    if (m < 4 || m > p_.max_skeleton_length)
      return;
    // Flatten the chosen vertices in position order.
    std::array<std::pair<int, int>, kMaxPackedLength> entries{};
    for (int i = 0; i < count_; ++i)
      entries[i] = {vertex_position(chosen_[i]), i};
    std::sort(entries.begin(), entries.begin() + count_);
    std::array<int, kMaxPackedLength> rank_of_vertex{};
    // Values increase with vertex value; rank by value.
    std::array<std::pair<int, int>, kMaxPackedLength> by_value{};
    for (int i = 0; i < count_; ++i)
      by_value[i] = {vertex_value(chosen_[i]), i};
    std::sort(by_value.begin(), by_value.begin() + count_);
    for (int r = 0; r < count_; ++r)
      rank_of_vertex[by_value[r].second] = r + 1;
    Packed skel = 0;
    std::uint32_t mask = 0;
    for (int j = 0; j < count_; ++j) {
      const int vi = entries[j].second;
      skel = (skel << 4) | static_cast<Packed>(rank_of_vertex[vi] - 1);
      const bool anchor = (vi == 0 && anchor_bits_first) ||
                          (vi == count_ - 1 && last_is_anchor);
      if (anchor)
        mask |= 1u << j;
    }
    std::uint64_t vertices = 0;
    for (int i = 0; i < count_; ++i)
      vertices |= std::uint64_t(1) << chosen_[i];
    offer(out_, {skel, key_word(count_, mask)}, Realisation{m, vertices});
  }

  void emit() {
    const int last = chosen_[count_ - 1];
    const bool first_anchor = chosen_[0] == 0;
    // The last chosen vertex ends the skeleton and carries the anchor...
    if (!(first_anchor && count_ == 1))
      record(first_anchor, true, last + 1);
    // ...or the skeleton continues past it.
    record(first_anchor, false, std::max(4, last + 2));
  }

  void descend() {
    ++leaves_;
    if (leaves_ > p_.max_search_leaves)
      throw ResourceError("closure: skeleton search exceeded " +
                          std::to_string(p_.max_search_leaves) + " nodes");
    emit();
    if (count_ >= p_.max_pattern_length)
      return;
    const int last = chosen_[count_ - 1];
    for (int step = 1; step <= 3; ++step) {
      const int next = last + step;
      if (next + 1 > p_.max_skeleton_length)
        break;
      chosen_[count_++] = next;
      descend();
      --count_;
    }
  }

  const ClosureProblem &p_;
  KeyMap &out_;
  std::array<int, kMaxPackedLength> chosen_{};
  int count_ = 0;
  std::uint64_t leaves_ = 0;
};

std::vector<SkeletonKey> keys_from_map(const KeyMap &map) {
  std::vector<SkeletonKey> keys;
  keys.reserve(map.size());
  for (const auto &[k, r] : map)
    keys.push_back({k.first, static_cast<int>(k.second & 0xFF),
                    static_cast<std::uint32_t>(k.second >> 8), r.m, r.vertices});
  std::sort(keys.begin(), keys.end());
  return keys;
}

void check_problem(const ClosureProblem &p) {
  if (p.max_pattern_length < 1 || p.max_pattern_length > kMaxPackedLength)
    throw InvalidInput("closure: pattern length must be within 1..16");
  if (p.max_skeleton_length > 63)
    throw ResourceError("closure: skeleton length above 63 (vertex mask width)");
}

} // namespace

std::vector<SkeletonKey> skeleton_keys_serial(const ClosureProblem &problem) {
  check_problem(problem);
  KeyMap map;
  KeySearch search(problem, map);
  for (int first = 0; first <= 2; ++first)
    if (first + 1 <= problem.max_skeleton_length)
      search.run_from(first);
  return keys_from_map(map);
}

std::vector<SkeletonKey> skeleton_keys(const ClosureProblem &problem) {
  check_problem(problem);
  // Seeds: every (first, second) prefix, plus singletons handled separately.
  std::vector<std::pair<int, int>> seeds;
  for (int first = 0; first <= 2; ++first)
    for (int step = 1; step <= 3; ++step)
      if (first + step + 1 <= problem.max_skeleton_length)
        seeds.emplace_back(first, first + step);

  KeyMap merged;
  {
    ClosureProblem single = problem;
    single.max_pattern_length = 1;
    KeySearch search(single, merged);
    for (int first = 0; first <= 2; ++first)
      if (first + 1 <= problem.max_skeleton_length)
        search.run_from(first);
  }
  if (problem.max_pattern_length >= 2) {
    const int threads = effective_threads();
    std::vector<KeyMap> parts(threads);
    std::exception_ptr failure;
    std::mutex failure_lock;
    const long long count = static_cast<long long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long s = 0; s < count; ++s) {
      try {
        KeySearch search(problem, parts[omp_get_thread_num()]);
        search.run_from_pair(seeds[s].first, seeds[s].second);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure)
          failure = std::current_exception();
      }
    }
    if (failure)
      std::rethrow_exception(failure);
    for (auto &part : parts)
      for (const auto &[k, r] : part)
        offer(merged, k, r);
  }
  return keys_from_map(merged);
}

// ---------------------------------------------------------------------------

namespace {

class Inflater {
public:
  Inflater(const ClosureProblem &p, std::vector<std::vector<Packed>> &buffers)
      : p_(p), buf_(buffers) {}

  void run(const SkeletonKey &key) {
    key_ = &key;
    budget_ = p_.max_element_length - p_.base_length(key.m);
    if (budget_ < 0)
      return;
    fill(0, 0, 0);
  }

private:
  void fill(int i, int total, int extra) {
    const int s = key_->length;
    if (i == s) {
      buf_[total].push_back(packed_inflate(key_->skeleton, s, blocks_.data(), lens_.data()));
      return;
    }
    const int remaining_min = s - i - 1;
    const auto &options = ((key_->anchor_mask >> i) & 1u) ? p_.anchor_options : p_.fill_options;
    for (const auto &o : options) {
      if (total + o.length + remaining_min > p_.max_pattern_length)
        continue;
      if (extra + o.extra > budget_)
        continue;
      blocks_[i] = o.pattern;
      lens_[i] = o.length;
      fill(i + 1, total + o.length, extra + o.extra);
    }
  }

  const ClosureProblem &p_;
  std::vector<std::vector<Packed>> &buf_;
  const SkeletonKey *key_ = nullptr;
  int budget_ = 0;
  std::array<Packed, kMaxPackedLength> blocks_{};
  std::array<int, kMaxPackedLength> lens_{};
};

std::size_t buffered_bytes(const std::vector<std::vector<Packed>> &b) {
  std::size_t s = 0;
  for (const auto &v : b)
    s += v.size() * sizeof(Packed);
  return s;
}

} // namespace

std::vector<std::vector<Packed>> inflate_keys_serial(const ClosureProblem &problem,
                                                     const std::vector<SkeletonKey> &keys) {
  check_problem(problem);
  std::vector<std::vector<Packed>> layers(problem.max_pattern_length + 1);
  Inflater inflater(problem, layers);
  for (const auto &key : keys) {
    inflater.run(key);
    for (auto &layer : layers)
      if (layer.size() > (std::size_t(1) << 24))
        sort_unique(layer);
    if (buffered_bytes(layers) > problem.memory_budget_bytes)
      throw ResourceError("closure: layers exceed the memory budget");
  }
  for (auto &layer : layers)
    sort_unique(layer);
  return layers;
}

std::vector<std::vector<Packed>> inflate_keys(const ClosureProblem &problem,
                                              const std::vector<SkeletonKey> &keys) {
  check_problem(problem);
  const int threads = effective_threads();
  const std::size_t per_thread_budget = problem.memory_budget_bytes / (2 * threads);
  std::vector<std::vector<std::vector<Packed>>> parts(
      threads, std::vector<std::vector<Packed>>(problem.max_pattern_length + 1));
  std::atomic<bool> failed{false};
  const long long count = static_cast<long long>(keys.size());

#pragma omp parallel num_threads(threads)
  {
    auto &mine = parts[omp_get_thread_num()];
    std::vector<std::size_t> compacted(mine.size(), 0);
    Inflater inflater(problem, mine);
#pragma omp for schedule(dynamic, 64)
    for (long long idx = 0; idx < count; ++idx) {
      if (failed.load(std::memory_order_relaxed))
        continue;
      inflater.run(keys[idx]);
      for (std::size_t n = 0; n < mine.size(); ++n)
        if (mine[n].size() > 2 * compacted[n] + (std::size_t(1) << 20)) {
          sort_unique(mine[n]);
          compacted[n] = mine[n].size();
        }
      if (buffered_bytes(mine) > per_thread_budget)
        failed = true;
    }
  }
  if (failed)
    throw ResourceError("closure: layers exceed the memory budget");

  std::vector<std::vector<Packed>> layers(problem.max_pattern_length + 1);
  for (std::size_t n = 0; n < layers.size(); ++n) {
    for (auto &part : parts) {
      sort_unique(part[n]);
      layers[n].insert(layers[n].end(), part[n].begin(), part[n].end());
      std::vector<Packed>().swap(part[n]);
    }
    sort_unique(layers[n]);
  }
  return layers;
}


// ---------------------------------------------------------------------------

namespace {

class DerivationSearch {
public:
  DerivationSearch(const ClosureProblem &p, int n, const std::vector<Packed> &targets,
                   std::vector<std::optional<Derivation>> &found)
      : p_(p), n_(n), targets_(targets), found_(found) {}

  void run(std::uint32_t key_index, const SkeletonKey &key) {
    key_ = &key;
    key_index_ = key_index;
    budget_ = p_.max_element_length - p_.base_length(key.m);
    if (budget_ < 0 || key.length > n_)
      return;
    fill(0, 0, 0);
  }

private:
  void fill(int i, int total, int extra) {
    const int s = key_->length;
    if (i == s) {
      if (total != n_)
        return;
      const Packed p = packed_inflate(key_->skeleton, s, blocks_.data(), lens_.data());
      auto it = std::lower_bound(targets_.begin(), targets_.end(), p);
      if (it == targets_.end() || *it != p)
        return;
      auto &slot = found_[it - targets_.begin()];
      Derivation d{key_index_, choice_};
      if (!slot || d < *slot)
        slot = std::move(d);
      return;
    }
    const int remaining_min = s - i - 1;
    const auto &options = ((key_->anchor_mask >> i) & 1u) ? p_.anchor_options : p_.fill_options;
    for (std::size_t o = 0; o < options.size(); ++o) {
      const auto &opt = options[o];
      if (total + opt.length + remaining_min > n_)
        continue;
      if (extra + opt.extra > budget_)
        continue;
      blocks_[i] = opt.pattern;
      lens_[i] = opt.length;
      choice_[i] = static_cast<std::uint16_t>(o);
      fill(i + 1, total + opt.length, extra + opt.extra);
    }
    choice_[i] = 0;
  }

  const ClosureProblem &p_;
  int n_;
  const std::vector<Packed> &targets_;
  std::vector<std::optional<Derivation>> &found_;
  const SkeletonKey *key_ = nullptr;
  std::uint32_t key_index_ = 0;
  int budget_ = 0;
  std::array<Packed, kMaxPackedLength> blocks_{};
  std::array<int, kMaxPackedLength> lens_{};
  std::array<std::uint16_t, kMaxPackedLength> choice_{};
};

} // namespace

std::vector<std::optional<Derivation>>
find_derivations(const ClosureProblem &problem, const std::vector<SkeletonKey> &keys,
                 int n, const std::vector<Packed> &targets) {
  check_problem(problem);
  const int threads = effective_threads();
  std::vector<std::vector<std::optional<Derivation>>> parts(
      threads, std::vector<std::optional<Derivation>>(targets.size()));
  const long long count = static_cast<long long>(keys.size());
#pragma omp parallel num_threads(threads)
  {
    DerivationSearch search(problem, n, targets, parts[omp_get_thread_num()]);
#pragma omp for schedule(dynamic, 64)
    for (long long idx = 0; idx < count; ++idx)
      search.run(static_cast<std::uint32_t>(idx), keys[idx]);
  }
  std::vector<std::optional<Derivation>> out(targets.size());
  for (auto &part : parts)
    for (std::size_t i = 0; i < out.size(); ++i)
      if (part[i] && (!out[i] || *part[i] < *out[i]))
        out[i] = std::move(part[i]);
  return out;
}

} // namespace permlab::kernels
