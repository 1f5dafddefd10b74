#include "permlab/closure.hpp"

#include "permlab/errors.hpp"
#include "permlab/oscillation.hpp"

#include <algorithm>
#include <set>

namespace permlab {

namespace {

// Multiset of packed permutations of one length: sorted by permutation, each
// with the number of times the grammar produced it.
using Bag = std::vector<std::pair<Packed, std::uint64_t>>;

void normalize(Bag &bag) {
  std::sort(bag.begin(), bag.end());
  std::size_t w = 0;
  for (std::size_t r = 0; r < bag.size(); ++r) {
    if (w > 0 && bag[w - 1].first == bag[r].first)
      bag[w - 1].second += bag[r].second;
    else
      bag[w++] = bag[r];
  }
  bag.resize(w);
}

Bag bag_of(std::vector<Packed> raw) {
  Bag bag;
  bag.reserve(raw.size());
  for (Packed p : raw)
    bag.emplace_back(p, 1);
  normalize(bag);
  return bag;
}

void append_sums(Bag &out, const Bag &left, int nl, const Bag &right, int nr) {
  for (const auto &[l, ml] : left)
    for (const auto &[r, mr] : right)
      out.emplace_back(packed_direct_sum(l, nl, r, nr), ml * mr);
}

std::uint64_t total(const Bag &bag) {
  std::uint64_t t = 0;
  for (const auto &e : bag)
    t += e.second;
  return t;
}

struct Inflations {
  const Permutation &alpha;
  const std::vector<Permutation> &fills; // closure of A
  int n_max;

  // Per length: every inflation of `osc` with α at `anchor` (-1 for none)
  // and closure members elsewhere, one entry per choice of blocks.
  std::vector<std::vector<Packed>> of(const Permutation &osc, int anchor) const {
    std::vector<std::vector<Packed>> out(n_max + 1);
    const int m = osc.size();
    std::vector<Packed> blocks(m);
    std::vector<int> lens(m);
    const Packed skel = pack(osc);
    const Packed alpha_packed = pack(alpha);
    auto rec = [&](auto &&self, int i, int total_len) -> void {
      if (i == m) {
        out[total_len].push_back(kernels::packed_inflate(skel, m, blocks.data(), lens.data()));
        return;
      }
      const int rest = m - i - 1;
      if (i == anchor) {
        if (total_len + alpha.size() + rest > n_max)
          return;
        blocks[i] = alpha_packed;
        lens[i] = alpha.size();
        self(self, i + 1, total_len + alpha.size());
        return;
      }
      for (const auto &f : fills) {
        if (total_len + f.size() + rest > n_max)
          continue;
        blocks[i] = pack(f);
        lens[i] = f.size();
        self(self, i + 1, total_len + f.size());
      }
    };
    if (m <= n_max)
      rec(rec, 0, 0);
    return out;
  }
};

int position_of_value(const Permutation &p, int v) {
  for (int i = 0; i < p.size(); ++i)
    if (p[i] == v)
      return i;
  return -1;
}

} // namespace

GrammarReport grammar_generate(const AntichainSpec &spec, int n_max, const GrammarOptions &options) {
  if (!spec.tau)
    throw InvalidInput("grammar: spec must be built from tau");
  if (n_max < 1 || n_max > kMaxPackedLength)
    throw InvalidInput("grammar: n_max must be within 1..16");
  const int cutoff = options.cutoff > 0 ? options.cutoff : default_cutoff(spec, n_max);

  ClosureTable own;
  const ClosureTable *oracle = options.closure;
  if (!oracle || oracle->n_max != n_max || oracle->cutoff != cutoff) {
    own = element_pattern_table(spec, n_max, cutoff, options.memory_budget_bytes);
    oracle = &own;
  }

  std::set<Permutation> closure_of_A;
  for (const auto &a : spec.A)
    for (auto &p : patterns(a))
      closure_of_A.insert(std::move(p));
  const std::vector<Permutation> fills(closure_of_A.begin(), closure_of_A.end());
  const Inflations inflate{spec.alpha, fills, n_max};
  const int anchor_len = spec.alpha.size();

  GrammarReport rep;
  rep.table.n_max = n_max;
  rep.table.cutoff = cutoff;
  rep.table.layers.assign(n_max + 1, {});
  rep.table.provenance.assign(n_max + 1, {});
  rep.raw.assign(n_max + 1, 0);
  rep.two_anchor_raw.assign(n_max + 1, 0);
  rep.sum_raw.assign(n_max + 1, 0);
  rep.distinct.assign(n_max + 1, 0);
  rep.repeated_members.assign(n_max + 1, 0);
  rep.max_multiplicity.assign(n_max + 1, 0);

  // Two anchors: σ_m with α at both designated entries.
  std::vector<Bag> two_anchor(n_max + 1);
  {
    std::vector<std::vector<Packed>> raw(n_max + 1);
    for (int m = 4; 2 * anchor_len + (m - 2) <= n_max; ++m) {
      const Permutation s = sigma(m);
      const auto [least, other] = endpoint_positions(m);
      std::vector<Packed> blocks(m);
      std::vector<int> lens(m);
      const Packed skel = pack(s);
      auto rec = [&](auto &&self, int i, int total_len) -> void {
        if (i == m) {
          raw[total_len].push_back(kernels::packed_inflate(skel, m, blocks.data(), lens.data()));
          return;
        }
        const int rest = m - i - 1;
        if (i == least || i == other) {
          if (total_len + anchor_len + rest > n_max)
            return;
          blocks[i] = pack(spec.alpha);
          lens[i] = anchor_len;
          self(self, i + 1, total_len + anchor_len);
          return;
        }
        for (const auto &f : fills) {
          if (total_len + f.size() + rest > n_max)
            continue;
          blocks[i] = pack(f);
          lens[i] = f.size();
          self(self, i + 1, total_len + f.size());
        }
      };
      rec(rec, 0, 0);
    }
    for (int n = 1; n <= n_max; ++n) {
      rep.two_anchor_raw[n] = raw[n].size();
      two_anchor[n] = bag_of(std::move(raw[n]));
    }
  }

  // Candidates for the first and last summands, kept when every emission up
  // to n_max lies in the closure.
  auto admit = [&](const std::string &role, const Permutation &osc, int anchor,
                   std::vector<Bag> &into) {
    PartCandidate c{role, osc, anchor, true, 0, std::nullopt};
    auto raw = inflate.of(osc, anchor);
    for (int n = 1; n <= n_max && c.admissible; ++n)
      for (Packed p : raw[n]) {
        ++c.emissions_checked;
        if (!std::binary_search(oracle->layers[n].begin(), oracle->layers[n].end(), p)) {
          c.admissible = false;
          c.rejected_by = unpack_perm(p, n);
          break;
        }
      }
    if (c.admissible)
      for (int n = 1; n <= n_max; ++n)
        for (Packed p : raw[n])
          into[n].emplace_back(p, 1);
    rep.candidates.push_back(std::move(c));
  };

  std::vector<Bag> beginnings(n_max + 1), endings(n_max + 1), pieces(n_max + 1);
  for (int m = 1; anchor_len + (m - 1) <= n_max; ++m) {
    for (const auto &osc : increasing_oscillations(m).variants) {
      admit("beginning", osc, position_of_value(osc, 1), beginnings);
      std::set<int> ends{position_of_value(osc, m), m - 1};
      for (int e : ends)
        admit("ending", osc, e, endings);
    }
  }
  for (int m = 1; m <= n_max; ++m)
    for (const auto &osc : increasing_oscillations(m).variants) {
      auto raw = inflate.of(osc, -1);
      for (int n = 1; n <= n_max; ++n)
        for (Packed p : raw[n])
          pieces[n].emplace_back(p, 1);
    }
  for (int n = 1; n <= n_max; ++n) {
    normalize(beginnings[n]);
    normalize(endings[n]);
    normalize(pieces[n]);
  }

  const Bag unit{{Packed(0), 1}};
  // Middles: possibly empty sums of inflated oscillations.
  std::vector<Bag> middles(n_max + 1);
  middles[0] = unit;
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1; j <= n; ++j)
      append_sums(middles[n], pieces[j], j, middles[n - j], n - j);
    normalize(middles[n]);
  }
  beginnings[0] = unit;
  endings[0] = unit;
  std::vector<Bag> head(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i <= n; ++i)
      append_sums(head[n], beginnings[i], i, middles[n - i], n - i);
    normalize(head[n]);
  }

  for (int n = 1; n <= n_max; ++n) {
    Bag sums;
    for (int l = 0; l <= n; ++l)
      append_sums(sums, head[n - l], n - l, endings[l], l);
    normalize(sums);
    rep.sum_raw[n] = total(sums);

    Bag all = two_anchor[n];
    const std::size_t two_anchor_count = all.size();
    all.insert(all.end(), sums.begin(), sums.end());
    normalize(all);

    rep.raw[n] = rep.two_anchor_raw[n] + rep.sum_raw[n];
    auto &layer = rep.table.layers[n];
    auto &prov = rep.table.provenance[n];
    layer.reserve(all.size());
    for (const auto &[p, mult] : all) {
      layer.push_back(p);
      const bool from_two_anchor =
          two_anchor_count > 0 &&
          std::binary_search(two_anchor[n].begin(), two_anchor[n].end(),
                             std::pair<Packed, std::uint64_t>{p, 0},
                             [](const auto &x, const auto &y) { return x.first < y.first; });
      prov.push_back(from_two_anchor ? Provenance::TwoAnchor : Provenance::Sum);
      if (mult > 1)
        ++rep.repeated_members[n];
      rep.max_multiplicity[n] = std::max(rep.max_multiplicity[n], mult);
    }
    rep.distinct[n] = layer.size();
  }
  return rep;
}

// ---------------------------------------------------------------------------

ReconcileReport reconcile_report(const AntichainSpec &spec, int n_max, const ClosureOptions &options) {
  ReconcileReport rep;
  rep.n_max = n_max;
  const ClosureCounts brute = closure_counts(spec, n_max, options);
  rep.cutoff = brute.cutoff;
  rep.stable = brute.stability_checked && brute.stable;

  GrammarOptions gopt;
  gopt.cutoff = brute.cutoff;
  gopt.memory_budget_bytes = options.memory_budget_bytes;
  gopt.closure = &brute.table;
  const GrammarReport grammar = grammar_generate(spec, n_max, gopt);
  rep.candidates = grammar.candidates;
  rep.sets_equal = grammar.table.same_sets(brute.table);

  const auto paper = series_expand(gf_closure_paper(spec).total, n_max);
  for (int n = 1; n <= n_max; ++n)
    rep.rows.push_back({n, BigInt(brute.table.count(n)), BigInt(grammar.distinct[n]),
                        grammar.raw[n], paper.at(n)});

  rep.fit_max_den_degree = std::max(0, (n_max - 4) / 2);
  rep.fit = fit_rational(brute.counts, rep.fit_max_den_degree, rep.fit_held_out);
  rep.soundness = verify_soundness(spec, grammar.table, brute.cutoff);
  return rep;
}

} // namespace permlab
