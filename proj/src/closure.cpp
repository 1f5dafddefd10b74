#include "permlab/closure.hpp"

#include "permlab/errors.hpp"
#include "permlab/oscillation.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_set>

namespace permlab {

namespace fs = std::filesystem;

const char *to_string(Provenance p) {
  switch (p) {
  case Provenance::SeedPattern:
    return "seed-pattern";
  case Provenance::ElementPattern:
    return "element-pattern";
  case Provenance::TwoAnchor:
    return "two-anchor";
  case Provenance::Sum:
    return "sum";
  }
  return "?";
}

std::size_t ClosureTable::count(int n) const {
  if (n < 1 || n >= static_cast<int>(layers.size()))
    return 0;
  return layers[n].size();
}

std::vector<std::size_t> ClosureTable::counts() const {
  std::vector<std::size_t> out;
  for (int n = 1; n <= n_max; ++n)
    out.push_back(count(n));
  return out;
}

Series ClosureTable::series() const {
  Series s;
  for (std::size_t c : counts())
    s.coeffs.emplace_back(c);
  return s;
}

bool ClosureTable::contains(const Permutation &pi) const {
  const int n = pi.size();
  if (n < 1 || n > n_max || n > kMaxPackedLength)
    return false;
  return std::binary_search(layers[n].begin(), layers[n].end(), pack(pi));
}

std::vector<Permutation> ClosureTable::members(int n) const {
  std::vector<Permutation> out;
  if (n < 1 || n >= static_cast<int>(layers.size()))
    return out;
  out.reserve(layers[n].size());
  for (Packed p : layers[n])
    out.push_back(unpack_perm(p, n));
  return out;
}

bool ClosureTable::same_sets(const ClosureTable &other) const {
  if (n_max != other.n_max)
    return false;
  for (int n = 1; n <= n_max; ++n)
    if (layers[n] != other.layers[n])
      return false;
  return true;
}

namespace {

ClosureTable empty_table(int n_max, int cutoff) {
  ClosureTable t;
  t.n_max = n_max;
  t.cutoff = cutoff;
  t.layers.assign(n_max + 1, {});
  t.provenance.assign(n_max + 1, {});
  return t;
}

void tag_all(ClosureTable &t, Provenance p) {
  for (int n = 0; n <= t.n_max; ++n)
    t.provenance[n].assign(t.layers[n].size(), p);
}

} // namespace

ClosureTable downset(const std::vector<Permutation> &seed, int n_max,
                     const DownsetLimits &limits) {
  if (n_max < 0)
    throw InvalidInput("downset: n_max must be >= 0");
  if (n_max > kMaxPackedLength)
    throw ResourceError("downset: tables are limited to length 16");
  ClosureTable t = empty_table(n_max, 0);
  int top = 0;
  for (const auto &s : seed)
    top = std::max(top, s.size());

  // Lengths above n_max are only intermediate; keep them unpacked.
  std::set<Permutation> above;
  int level = top;
  for (; level > n_max; --level) {
    std::set<Permutation> next;
    for (const auto &s : seed)
      if (s.size() == level)
        above.insert(s);
    for (const auto &p : above)
      for (int i = 0; i < level; ++i) {
        next.insert(delete_entry(p, i));
        if (next.size() > limits.max_layer)
          throw ResourceError("downset: layer at length " + std::to_string(level - 1) +
                              " exceeds " + std::to_string(limits.max_layer) + " members");
      }
    above.swap(next);
  }
  std::vector<Packed> current;
  for (const auto &p : above)
    current.push_back(pack(p));
  for (int n = std::min(top, n_max); n >= 1; --n) {
    for (const auto &s : seed)
      if (s.size() == n)
        current.push_back(pack(s));
    kernels::sort_unique(current);
    if (current.size() > limits.max_layer)
      throw ResourceError("downset: layer at length " + std::to_string(n) + " exceeds " +
                          std::to_string(limits.max_layer) + " members");
    t.layers[n] = current;
    current = n >= 2 ? kernels::deletion_layer(current, n) : std::vector<Packed>{};
  }
  tag_all(t, Provenance::SeedPattern);
  return t;
}

std::optional<Permutation> downward_closure_violation(const ClosureTable &table) {
  for (int n = table.n_max; n >= 2; --n) {
    const auto &layer = table.layers[n];
    if (layer.empty())
      continue;
    const auto &below = table.layers[n - 1];
    for (Packed p : layer) {
      const auto v = unpack(p, n);
      for (int i = 0; i < n; ++i) {
        Packed q = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i)
            continue;
          const int x = v[j] > v[i] ? v[j] - 1 : v[j];
          q = (q << 4) | static_cast<Packed>(x - 1);
        }
        if (!std::binary_search(below.begin(), below.end(), q))
          return unpack_perm(p, n);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

kernels::ClosureProblem closure_problem(const AntichainSpec &spec, int n_max, int cutoff) {
  if (n_max < 1 || n_max > kMaxPackedLength)
    throw InvalidInput("closure: n_max must be within 1..16");
  if (cutoff < n_max)
    throw InvalidInput("closure: cutoff must be >= n_max");
  if (spec.alpha.size() > kMaxPackedLength || spec.max_fill_length() > kMaxPackedLength)
    throw ResourceError("closure: anchor and fills are limited to length 16");

  kernels::ClosureProblem p;
  p.max_pattern_length = n_max;
  p.anchor_length = spec.alpha.size();
  p.min_fill_length = spec.min_fill_length();
  p.max_element_length = cutoff;
  const int room = cutoff - 2 * p.anchor_length;
  p.max_skeleton_length = room < 0 ? 0 : room / p.min_fill_length + 2;
  p.max_skeleton_length = std::min(p.max_skeleton_length, 63);

  for (const auto &q : patterns(spec.alpha))
    p.anchor_options.push_back({pack(q), q.size(), 0});

  std::map<Permutation, int> shortest_host;
  for (const auto &a : spec.A)
    for (const auto &q : patterns(a)) {
      auto [it, inserted] = shortest_host.try_emplace(q, a.size());
      if (!inserted)
        it->second = std::min(it->second, a.size());
    }
  for (const auto &[q, len] : shortest_host)
    p.fill_options.push_back({pack(q), q.size(), len - p.min_fill_length});
  return p;
}

ClosureTable element_pattern_table(const AntichainSpec &spec, int n_max, int cutoff,
                                   std::size_t memory_budget_bytes) {
  auto problem = closure_problem(spec, n_max, cutoff);
  problem.memory_budget_bytes = memory_budget_bytes;
  ClosureTable t = empty_table(n_max, cutoff);
  if (problem.max_skeleton_length < 4) {
    tag_all(t, Provenance::ElementPattern);
    return t;
  }
  const auto keys = kernels::skeleton_keys(problem);
  auto layers = kernels::inflate_keys(problem, keys);
  for (int n = 1; n <= n_max; ++n)
    t.layers[n] = std::move(layers[n]);
  tag_all(t, Provenance::ElementPattern);
  return t;
}

namespace {

ClosureTable cached_table(const AntichainSpec &spec, int n_max, int cutoff,
                          const ClosureOptions &options, bool &hit) {
  hit = false;
  if (!options.cache_dir.empty()) {
    const std::string dir = options.cache_dir + "/" + table_address(spec, n_max, cutoff);
    if (auto t = load_table(dir, spec.fingerprint(), n_max, cutoff)) {
      hit = true;
      return std::move(*t);
    }
    ClosureTable t = element_pattern_table(spec, n_max, cutoff, options.memory_budget_bytes);
    save_table(t, dir, spec.fingerprint());
    return t;
  }
  return element_pattern_table(spec, n_max, cutoff, options.memory_budget_bytes);
}

} // namespace

ClosureCounts closure_counts(const AntichainSpec &spec, int n_max, const ClosureOptions &options) {
  ClosureCounts out;
  out.cutoff = options.cutoff > 0 ? options.cutoff : default_cutoff(spec, n_max);
  bool hit = false;
  out.table = cached_table(spec, n_max, out.cutoff, options, hit);
  out.from_cache = hit;
  out.counts = out.table.series();
  if (options.stability_check) {
    out.stability_checked = true;
    out.recheck_cutoff = out.cutoff + options.stability_margin;
    bool hit2 = false;
    const ClosureTable again = cached_table(spec, n_max, out.recheck_cutoff, options, hit2);
    out.recheck_counts = again.counts();
    out.stable = again.same_sets(out.table);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::optional<ClosureWitness>>
closure_witnesses(const AntichainSpec &spec, int cutoff, int n, const std::vector<Packed> &members) {
  std::vector<std::optional<ClosureWitness>> out(members.size());
  if (members.empty())
    return out;
  const auto problem = closure_problem(spec, n, cutoff);
  if (problem.max_skeleton_length < 4)
    return out;
  const auto keys = kernels::skeleton_keys(problem);
  const auto found = kernels::find_derivations(problem, keys, n, members);

  // Default fill and the least member of A containing each fill option.
  const Permutation &shortest = *std::min_element(
      spec.A.begin(), spec.A.end(),
      [](const Permutation &x, const Permutation &y) { return x.size() < y.size(); });
  std::vector<Permutation> host_of_option;
  for (const auto &o : problem.fill_options) {
    const Permutation q = unpack_perm(o.pattern, o.length);
    const Permutation *best = nullptr;
    for (const auto &a : spec.A)
      if (a.size() == o.extra + problem.min_fill_length && is_contained(q, a)) {
        best = &a;
        break;
      }
    host_of_option.push_back(*best);
  }

  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    if (!found[idx])
      continue;
    const auto &d = *found[idx];
    const auto &key = keys[d.key];
    const int m = key.m;

    // σ_m position of every path vertex 0..m-1.
    std::vector<std::pair<int, int>> by_position;
    for (int t = 0; t < m; ++t)
      by_position.emplace_back(kernels::path_vertex_position(t), t);
    std::sort(by_position.begin(), by_position.end());
    std::vector<int> sigma_pos(m);
    for (int j = 0; j < m; ++j)
      sigma_pos[by_position[j].second] = j;

    // Kept vertices in position order are the key's entries.
    std::vector<int> kept;
    for (int t = 0; t < m; ++t)
      if ((key.vertices >> t) & 1u)
        kept.push_back(t);
    std::sort(kept.begin(), kept.end(),
              [&](int x, int y) { return sigma_pos[x] < sigma_pos[y]; });

    std::vector<Permutation> block(m, shortest);
    std::vector<std::optional<Permutation>> part(m);
    const auto [least, other] = endpoint_positions(m);
    block[least] = spec.alpha;
    block[other] = spec.alpha;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const int j = sigma_pos[kept[i]];
      const std::uint16_t o = d.options[i];
      if ((key.anchor_mask >> i) & 1u) {
        const auto &opt = problem.anchor_options[o];
        part[j] = unpack_perm(opt.pattern, opt.length);
      } else {
        const auto &opt = problem.fill_options[o];
        part[j] = unpack_perm(opt.pattern, opt.length);
        block[j] = host_of_option[o];
      }
    }

    ClosureWitness w;
    w.element.m = m;
    for (int j = 0; j < m; ++j)
      if (j != least && j != other)
        w.element.fills.push_back(block[j]);
    w.host = build_element(spec, w.element);
    int offset = 0;
    for (int j = 0; j < m; ++j) {
      if (part[j]) {
        const auto occ = contains(block[j], *part[j]);
        if (!occ)
          throw std::logic_error("closure witness: option not contained in its block");
        for (int q : occ->positions)
          w.positions.push_back(offset + q);
      }
      offset += block[j].size();
    }
    std::sort(w.positions.begin(), w.positions.end());
    out[idx] = std::move(w);
  }
  return out;
}

bool in_closure(const Permutation &pi, const AntichainSpec &spec, int cutoff) {
  if (pi.empty())
    return true;
  if (pi.size() > cutoff)
    return false;
  if (pi.size() <= kMaxPackedLength) {
    const auto w = closure_witnesses(spec, cutoff, pi.size(), {pack(pi)});
    return w[0].has_value();
  }
  // Long patterns: scan the elements themselves.
  std::size_t scanned = 0;
  for (int L = std::max(pi.size(), spec.min_element_length()); L <= cutoff; ++L) {
    const auto layer = elements_of_length(spec, L);
    scanned += layer.size();
    if (scanned > 1'000'000)
      throw ResourceError("in_closure: more than 10^6 elements to scan");
    for (const auto &e : layer)
      if (e.size() <= kMaxContainmentHost && is_contained(pi, e))
        return true;
  }
  return false;
}

SoundnessReport verify_soundness(const AntichainSpec &spec, const ClosureTable &table, int cutoff) {
  SoundnessReport rep;
  constexpr std::size_t batch = 1'000'000;
  for (int n = 1; n <= table.n_max; ++n) {
    const auto &layer = table.layers[n];
    for (std::size_t start = 0; start < layer.size(); start += batch) {
      const std::vector<Packed> chunk(layer.begin() + start,
                                      layer.begin() + std::min(layer.size(), start + batch));
      const auto witnesses = closure_witnesses(spec, cutoff, n, chunk);
      for (std::size_t i = 0; i < chunk.size(); ++i) {
        ++rep.checked;
        const Permutation member = unpack_perm(chunk[i], n);
        const auto &w = witnesses[i];
        const bool ok = w && w->host.size() <= cutoff &&
                        occurrence_is_valid(w->host, member, w->positions);
        if (ok)
          ++rep.verified;
        else if (!rep.first_failure)
          rep.first_failure = member;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::string table_address(const AntichainSpec &spec, int n_max, int cutoff) {
  const std::string text =
      spec.fingerprint() + ";n_max=" + std::to_string(n_max) + ";cutoff=" + std::to_string(cutoff);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void save_table(const ClosureTable &table, const std::string &dir, const std::string &fingerprint) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw InvalidInput("cache: cannot create " + dir + ": " + ec.message());
  for (int n = 1; n <= table.n_max; ++n) {
    char name[32];
    std::snprintf(name, sizeof name, "len_%02d.txt", n);
    std::ofstream out(fs::path(dir) / name);
    std::string line;
    for (Packed p : table.layers[n]) {
      line.clear();
      for (int i = 0; i < n; ++i) {
        if (i)
          line += ' ';
        line += std::to_string(packed_at(p, n, i));
      }
      line += '\n';
      out << line;
    }
  }
  // Written last: its presence marks a complete table.
  std::ofstream manifest(fs::path(dir) / "manifest.txt");
  manifest << "fingerprint " << fingerprint << "\n"
           << "n_max " << table.n_max << "\n"
           << "cutoff " << table.cutoff << "\n"
           << "provenance "
           << (table.n_max >= 1 && !table.provenance[1].empty() ? to_string(table.provenance[1][0])
                                                                 : "element-pattern")
           << "\n";
}

std::optional<ClosureTable> load_table(const std::string &dir, const std::string &fingerprint,
                                       int n_max, int cutoff) {
  std::ifstream manifest(fs::path(dir) / "manifest.txt");
  if (!manifest)
    return std::nullopt;
  std::string line, fp;
  int nm = -1, co = -1;
  while (std::getline(manifest, line)) {
    const auto space = line.find(' ');
    if (space == std::string::npos)
      continue;
    const std::string key = line.substr(0, space);
    const std::string value = line.substr(space + 1);
    if (key == "fingerprint")
      fp = value;
    else if (key == "n_max")
      nm = std::atoi(value.c_str());
    else if (key == "cutoff")
      co = std::atoi(value.c_str());
  }
  if (fp != fingerprint || nm != n_max || co != cutoff)
    return std::nullopt;
  ClosureTable t = empty_table(n_max, cutoff);
  for (int n = 1; n <= n_max; ++n) {
    char name[32];
    std::snprintf(name, sizeof name, "len_%02d.txt", n);
    std::ifstream in(fs::path(dir) / name);
    if (!in)
      return std::nullopt;
    while (std::getline(in, line)) {
      if (line.empty())
        continue;
      t.layers[n].push_back(pack(Permutation::parse(line)));
    }
    if (!std::is_sorted(t.layers[n].begin(), t.layers[n].end()))
      return std::nullopt;
  }
  tag_all(t, Provenance::ElementPattern);
  return t;
}

} // namespace permlab
