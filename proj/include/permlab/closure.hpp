#pragma once

#include "permlab/antichain.hpp"
#include "permlab/genfun.hpp"
#include "permlab/kernels.hpp"
#include "permlab/packed.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace permlab {

/// Construction that placed a member in a table.
enum class Provenance : std::uint8_t {
  SeedPattern,    // pattern of an explicit seed set
  ElementPattern, // pattern of an antichain element (exhaustive route)
  TwoAnchor,      // grammar: sum indecomposable with both anchor blocks
  Sum,            // grammar: beginning ⊕ middle ⊕ ending
};

const char *to_string(Provenance p);

/// Per-length deduplicated sets of permutations of length 1..n_max, each
/// layer sorted (numeric order of the packed form is lexicographic order).
struct ClosureTable {
  int n_max = 0;
  int cutoff = 0; // element-length bound used to build it; 0 when not relevant
  std::vector<std::vector<Packed>> layers;            // index = length
  std::vector<std::vector<Provenance>> provenance;    // parallel to layers

  std::size_t count(int n) const;
  std::vector<std::size_t> counts() const;
  Series series() const;
  bool contains(const Permutation &pi) const;
  std::vector<Permutation> members(int n) const;
  /// Same members at every length (provenance ignored).
  bool same_sets(const ClosureTable &other) const;
};

struct DownsetLimits {
  std::size_t max_layer = 50'000'000;
};

/// All patterns of seed members with length 1..n_max.
ClosureTable downset(const std::vector<Permutation> &seed, int n_max,
                     const DownsetLimits &limits = {});

/// First member (if any) with a one-point deletion missing from the layer
/// below; nullopt when the table is downward closed.
std::optional<Permutation> downward_closure_violation(const ClosureTable &table);

/// Element-length bound used when none is given: both anchors, n_max entries
/// filled by the longest member of A and two more filled by the shortest.
/// For k = 3 with A = A_τ this is 3·n_max + 12.
inline int default_cutoff(const AntichainSpec &spec, int n_max) {
  return 2 * spec.alpha.size() + n_max * spec.max_fill_length() + 2 * spec.min_fill_length();
}

struct ClosureOptions {
  int cutoff = 0; // 0 selects default_cutoff(spec, n_max)
  bool stability_check = true;
  int stability_margin = 4;
  std::size_t memory_budget_bytes = std::size_t(3) << 30;
  /// Directory for persisted tables; empty disables caching.
  std::string cache_dir;
};

/// The exhaustive route's inputs for one spec: skeleton search bounds and the
/// block options (patterns of α for anchors, patterns of A elsewhere).
kernels::ClosureProblem closure_problem(const AntichainSpec &spec, int n_max, int cutoff);

struct ClosureCounts {
  ClosureTable table;
  Series counts;
  int cutoff = 0;
  bool stability_checked = false;
  bool stable = false;
  int recheck_cutoff = 0;
  std::vector<std::size_t> recheck_counts;
  bool from_cache = false;
};

/// Patterns of every element of length <= cutoff, truncated at n_max.
ClosureCounts closure_counts(const AntichainSpec &spec, int n_max,
                             const ClosureOptions &options = {});

/// Table only, no stability recheck.
ClosureTable element_pattern_table(const AntichainSpec &spec, int n_max, int cutoff,
                                   std::size_t memory_budget_bytes = std::size_t(3) << 30);

/// True iff π is a pattern of some element of length <= cutoff.
bool in_closure(const Permutation &pi, const AntichainSpec &spec, int cutoff);

/// An element together with an occurrence of a closure member in it.
struct ClosureWitness {
  ElementId element;
  Permutation host;
  std::vector<int> positions;
};

/// Concrete witnesses for members of one length (all of length n, sorted),
/// built from the exhaustive route's derivations; nullopt marks members that
/// are not patterns of any element of length <= cutoff.
std::vector<std::optional<ClosureWitness>>
closure_witnesses(const AntichainSpec &spec, int cutoff, int n,
                  const std::vector<Packed> &members);

// --- persistence ------------------------------------------------------------

/// Content address of a table: hex FNV-1a over the spec fingerprint, n_max
/// and cutoff.
std::string table_address(const AntichainSpec &spec, int n_max, int cutoff);

void save_table(const ClosureTable &table, const std::string &dir,
                const std::string &fingerprint);
std::optional<ClosureTable> load_table(const std::string &dir, const std::string &fingerprint,
                                       int n_max, int cutoff);

// --- grammar ----------------------------------------------------------------

/// One admissibility decision for a beginning or ending candidate.
struct PartCandidate {
  std::string role;       // "beginning" or "ending"
  Permutation oscillation;
  int anchor_position = 0; // 0-based position inflated by α
  bool admissible = false;
  std::size_t emissions_checked = 0;
  std::optional<Permutation> rejected_by; // first emission outside the closure
};

struct GrammarReport {
  ClosureTable table;                    // distinct members
  std::vector<BigInt> raw;               // index n: generation events
  std::vector<BigInt> two_anchor_raw;    // index n
  std::vector<BigInt> sum_raw;           // index n
  std::vector<std::size_t> distinct;     // index n
  std::vector<PartCandidate> candidates;
  /// Members generated more than once: index n -> count of such members.
  std::vector<std::size_t> repeated_members;
  /// Largest multiplicity seen at each length.
  std::vector<std::uint64_t> max_multiplicity;
};

struct GrammarOptions {
  int cutoff = 0; // closure used to decide admissibility; 0 = default_cutoff
  std::size_t memory_budget_bytes = std::size_t(3) << 30;
  /// Reuse an already computed closure table (must match spec, n_max, cutoff).
  const ClosureTable *closure = nullptr;
};

GrammarReport grammar_generate(const AntichainSpec &spec, int n_max,
                               const GrammarOptions &options = {});

struct SoundnessReport {
  std::size_t checked = 0;
  std::size_t verified = 0;
  std::optional<Permutation> first_failure;
  bool ok() const { return checked == verified; }
};

/// Builds a concrete containing element for every member of a table and
/// checks the occurrence.
SoundnessReport verify_soundness(const AntichainSpec &spec, const ClosureTable &table,
                                 int cutoff);

// --- reconciliation ---------------------------------------------------------

struct ReconcileRow {
  int n = 0;
  BigInt brute;
  BigInt grammar_distinct;
  BigInt grammar_raw;
  BigInt paper_gf;
};

struct ReconcileReport {
  int n_max = 0;
  int cutoff = 0;
  bool stable = false;
  std::vector<ReconcileRow> rows;
  std::vector<PartCandidate> candidates;
  int fit_max_den_degree = 0;
  int fit_held_out = 4;
  std::optional<RationalGF> fit;
  bool sets_equal = false; // grammar distinct set == exhaustive set, per length
  SoundnessReport soundness;
};

ReconcileReport reconcile_report(const AntichainSpec &spec, int n_max,
                                 const ClosureOptions &options = {});

} // namespace permlab
