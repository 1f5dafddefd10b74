#pragma once

#include "permlab/antichain.hpp"
#include "permlab/closure.hpp"
#include "permlab/genfun.hpp"
#include "permlab/packed.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permlab {

/// Av(basis) for a finite nonempty antichain basis.
struct ClassSpec {
  std::vector<Permutation> basis; // canonical order

  /// Throws InvalidInput for an empty basis or one that is not an antichain.
  static ClassSpec make(std::vector<Permutation> basis);

  bool contains(const Permutation &pi) const;
};

struct AvoiderLimits {
  int max_length = 12;
  std::size_t max_layer = 50'000'000;
};

/// Layers 0..n_max of Av(basis) (layer 0 holds the empty permutation when the
/// class is nonempty), each sorted. Built by inserting a new maximum into
/// every member of the previous layer and discarding basis containers.
std::vector<std::vector<Packed>> avoider_layers(const ClassSpec &cls, int n_max,
                                                const AvoiderLimits &limits = {});

std::vector<Permutation> avoiders(const ClassSpec &cls, int n,
                                  const AvoiderLimits &limits = {});

struct ConditionReport {
  CheckResult anchor_outside_class;   // α has length k+1 and α ∉ C
  CheckResult tau_not_in_anchor;      // τ ≰ α
  CheckResult growth_exceeds_class;   // gr(U) > empirical upper growth of C
  double antichain_growth = 0.0;
  double class_growth_estimate = 0.0;
  /// |C_n| / |C_{n-1}| for n = 2..n_probe (0 when undefined).
  std::vector<double> ratios;
  bool ok() const {
    return anchor_outside_class.passed && tau_not_in_anchor.passed &&
           growth_exceeds_class.passed;
  }
};

ConditionReport check_conditions(const ClassSpec &cls, const AntichainSpec &spec, int n_probe);

struct SuperclassOptions {
  /// Remove |C_n| antichain elements per length instead of |C_n \ U^≤_n|.
  bool paper_literal_removal = false;
  ClosureOptions closure;
  AvoiderLimits avoider_limits{};
  int condition_probe = 0; // 0 = n_max
};

struct SuperclassRow {
  int n = 0;
  std::size_t class_count = 0;     // |C_n|
  std::size_t closure_count = 0;   // |U^≤_n|
  std::size_t overlap = 0;         // |C_n ∩ U^≤_n|
  std::size_t class_outside = 0;   // |C_n \ U^≤_n|
  std::size_t antichain_count = 0; // |U_n|
  std::size_t removed = 0;         // |X_n|
  std::size_t rational_count = 0;  // |C_rat,n|
  /// Literal-mode removal count and the resulting size, for comparison.
  std::size_t literal_removed = 0;
  std::size_t literal_rational_count = 0;
};

struct SuperclassReport {
  ConditionReport conditions;
  int n_max = 0;
  int cutoff = 0;
  bool closure_stable = false;
  bool paper_literal_removal = false;
  std::optional<int> threshold;      // N
  std::vector<int> shortfall;        // lengths with |U_n| < |C_n \ U^≤_n|
  std::vector<SuperclassRow> rows;
  std::vector<Permutation> removed;  // the X_n, by length then lexicographic
  bool class_disjoint_from_antichain = false;
  bool class_contained = false;      // C ⊆ C_rat within range
  std::optional<Permutation> closure_violation; // C_rat not downward closed
  bool removed_are_maximal = false;
  bool counts_match_closure = false; // |C_rat,n| = |U^≤_n| for N <= n <= n_max
  std::optional<RationalGF> fit_rational_class;
  std::optional<RationalGF> fit_closure;
  bool same_denominator = false;
  std::string failure;               // non-empty when the construction failed
  bool ok() const;
};

SuperclassReport build_rational_superclass(const ClassSpec &cls, const AntichainSpec &spec,
                                           int n_max, const SuperclassOptions &options = {});

} // namespace permlab
