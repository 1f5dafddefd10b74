#include "permlab/superclass.hpp"

#include "permlab/errors.hpp"
#include "permlab/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace permlab {

ClassSpec ClassSpec::make(std::vector<Permutation> basis) {
  if (basis.empty())
    throw InvalidInput("class: basis must be nonempty");
  for (const auto &b : basis)
    if (b.empty())
      throw InvalidInput("class: basis contains the empty permutation");
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  const auto pairwise = verify_pairwise(basis);
  if (!pairwise.passed)
    throw InvalidInput("class: basis is not an antichain (" + pairwise.offending->first.str() +
                       " <= " + pairwise.offending->second.str() + ")");
  return ClassSpec{std::move(basis)};
}

bool ClassSpec::contains(const Permutation &pi) const {
  for (const auto &b : basis)
    if (b.size() <= pi.size() && is_contained(b, pi))
      return false;
  return true;
}

std::vector<std::vector<Packed>> avoider_layers(const ClassSpec &cls, int n_max,
                                                const AvoiderLimits &limits) {
  if (n_max > limits.max_length)
    throw ResourceError("avoiders: length " + std::to_string(n_max) + " above the cap " +
                        std::to_string(limits.max_length));
  if (n_max > kMaxPackedLength)
    throw ResourceError("avoiders: packed layers are limited to length 16");
  std::vector<std::vector<Packed>> layers(n_max + 1);
  layers[0] = {Packed(0)};
  for (int n = 0; n < n_max; ++n) {
    if (layers[n].empty())
      break;
    layers[n + 1] = kernels::extend_avoiders(layers[n], n, cls.basis);
    if (layers[n + 1].size() > limits.max_layer)
      throw ResourceError("avoiders: layer " + std::to_string(n + 1) + " exceeds " +
                          std::to_string(limits.max_layer) + " members");
  }
  return layers;
}

std::vector<Permutation> avoiders(const ClassSpec &cls, int n, const AvoiderLimits &limits) {
  if (n < 0)
    throw InvalidInput("avoiders: n must be >= 0");
  const auto layers = avoider_layers(cls, n, limits);
  std::vector<Permutation> out;
  for (Packed p : layers[n])
    out.push_back(unpack_perm(p, n));
  return out;
}

ConditionReport check_conditions(const ClassSpec &cls, const AntichainSpec &spec, int n_probe) {
  ConditionReport rep;
  {
    const bool in_class = cls.contains(spec.alpha);
    rep.anchor_outside_class = {"alpha has length k+1 and lies outside the class",
                                spec.alpha.size() == spec.k + 1 && !in_class,
                                in_class ? spec.alpha.str() + " avoids every basis element"
                                         : ""};
  }
  if (spec.tau) {
    const bool inside = is_contained(*spec.tau, spec.alpha);
    rep.tau_not_in_anchor = {"tau is not contained in alpha", !inside,
                             inside ? spec.tau->str() + " <= " + spec.alpha.str() : ""};
  } else {
    rep.tau_not_in_anchor = {"tau is not contained in alpha", false, "spec has no tau"};
  }

  rep.antichain_growth = growth_rate(gf_antichain(spec)).rate;
  AvoiderLimits limits;
  limits.max_length = std::max(limits.max_length, n_probe);
  const auto layers = avoider_layers(cls, n_probe, limits);
  double estimate = 0.0;
  for (int n = 2; n <= n_probe; ++n) {
    const double prev = static_cast<double>(layers[n - 1].size());
    const double cur = static_cast<double>(layers[n].size());
    const double r = prev > 0 ? cur / prev : 0.0;
    rep.ratios.push_back(r);
    estimate = std::max(estimate, r);
  }
  rep.class_growth_estimate = estimate;
  std::ostringstream os;
  os.precision(6);
  os << "empirical: gr(U)=" << rep.antichain_growth << " vs max |C_n|/|C_(n-1)| (n<=" << n_probe
     << ")=" << estimate;
  rep.growth_exceeds_class = {"growth of the antichain exceeds the class (empirical)",
                              rep.antichain_growth > estimate, os.str()};
  return rep;
}

bool SuperclassReport::ok() const {
  return failure.empty() && conditions.ok() && threshold && class_disjoint_from_antichain &&
         class_contained && !closure_violation && removed_are_maximal && counts_match_closure;
}

namespace {

std::vector<Packed> set_union(const std::vector<Packed> &a, const std::vector<Packed> &b) {
  std::vector<Packed> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Packed> set_difference(const std::vector<Packed> &a, const std::vector<Packed> &b) {
  std::vector<Packed> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Packed> set_intersection(const std::vector<Packed> &a, const std::vector<Packed> &b) {
  std::vector<Packed> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool deletes_to(Packed y, int n1, Packed x) {
  const auto v = unpack(y, n1);
  for (int i = 0; i < n1; ++i) {
    Packed q = 0;
    for (int j = 0; j < n1; ++j) {
      if (j == i)
        continue;
      const int val = v[j] > v[i] ? v[j] - 1 : v[j];
      q = (q << 4) | static_cast<Packed>(val - 1);
    }
    if (q == x)
      return true;
  }
  return false;
}

} // namespace

SuperclassReport build_rational_superclass(const ClassSpec &cls, const AntichainSpec &spec,
                                           int n_max, const SuperclassOptions &options) {
  SuperclassReport rep;
  rep.n_max = n_max;
  rep.paper_literal_removal = options.paper_literal_removal;
  const int probe = options.condition_probe > 0 ? options.condition_probe : n_max;
  rep.conditions = check_conditions(cls, spec, probe);
  if (!rep.conditions.anchor_outside_class.passed || !rep.conditions.tau_not_in_anchor.passed) {
    rep.failure = "conditions on alpha and tau fail";
    return rep;
  }

  const ClosureCounts closure = closure_counts(spec, n_max, options.closure);
  rep.cutoff = closure.cutoff;
  rep.closure_stable = closure.stability_checked && closure.stable;

  AvoiderLimits limits = options.avoider_limits;
  limits.max_length = std::max(limits.max_length, n_max);
  const auto class_layers = avoider_layers(cls, n_max, limits);

  std::vector<std::vector<Packed>> antichain(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto &e : elements_of_length(spec, n))
      antichain[n].push_back(pack(e));
    std::sort(antichain[n].begin(), antichain[n].end());
  }

  // Threshold: least n0 >= the shortest element length with enough antichain
  // elements at every length from n0 to n_max.
  const int floor_len = spec.min_element_length();
  std::vector<std::size_t> outside(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n)
    outside[n] = set_difference(class_layers[n], closure.table.layers[n]).size();
  for (int n = n_max; n >= 1; --n) {
    if (n < floor_len)
      break;
    if (antichain[n].size() < outside[n]) {
      break;
    }
    rep.threshold = n;
  }
  for (int n = std::max(1, floor_len); n <= n_max; ++n)
    if (antichain[n].size() < outside[n])
      rep.shortfall.push_back(n);
  if (!rep.threshold) {
    std::ostringstream os;
    os << "no threshold within n_max=" << n_max << "; shortfall at lengths";
    for (int n : rep.shortfall)
      os << ' ' << n;
    rep.failure = os.str();
  }

  rep.class_disjoint_from_antichain = true;
  rep.class_contained = true;
  rep.removed_are_maximal = true;
  rep.counts_match_closure = rep.threshold.has_value();

  std::vector<std::vector<Packed>> rational(n_max + 1);
  std::vector<std::vector<Packed>> removed(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    SuperclassRow row;
    row.n = n;
    row.class_count = class_layers[n].size();
    row.closure_count = closure.table.layers[n].size();
    row.overlap = set_intersection(class_layers[n], closure.table.layers[n]).size();
    row.class_outside = outside[n];
    row.antichain_count = antichain[n].size();

    if (!set_intersection(class_layers[n], antichain[n]).empty())
      rep.class_disjoint_from_antichain = false;

    const auto merged = set_union(class_layers[n], closure.table.layers[n]);
    const bool removing = rep.threshold && n >= *rep.threshold;
    if (removing) {
      row.removed = std::min(row.class_outside, row.antichain_count);
      row.literal_removed = std::min(row.class_count, row.antichain_count);
    }
    const std::size_t take = options.paper_literal_removal ? row.literal_removed : row.removed;
    removed[n].assign(antichain[n].begin(), antichain[n].begin() + take);
    rational[n] = set_difference(merged, removed[n]);
    row.rational_count = rational[n].size();
    row.literal_rational_count = merged.size() - row.literal_removed;
    if (removing && row.rational_count != row.closure_count)
      rep.counts_match_closure = false;

    if (set_difference(class_layers[n], rational[n]).size() != 0)
      rep.class_contained = false;
    for (Packed x : removed[n])
      rep.removed.push_back(unpack_perm(x, n));
    rep.rows.push_back(row);
  }

  ClosureTable materialized;
  materialized.n_max = n_max;
  materialized.cutoff = closure.cutoff;
  materialized.layers = rational;
  materialized.provenance.assign(n_max + 1, {});
  rep.closure_violation = downward_closure_violation(materialized);

  for (int n = 1; n < n_max; ++n)
    for (Packed x : removed[n])
      for (Packed y : rational[n + 1])
        if (deletes_to(y, n + 1, x)) {
          rep.removed_are_maximal = false;
          break;
        }

  if (rep.threshold) {
    const int N = *rep.threshold;
    const int terms = n_max - N + 1;
    if (terms >= 4) {
      const int degree = (terms - 4) / 2;
      Series rat, clo;
      for (int n = N; n <= n_max; ++n) {
        rat.coeffs.emplace_back(rational[n].size());
        clo.coeffs.emplace_back(closure.table.layers[n].size());
      }
      rep.fit_rational_class = fit_rational(rat, degree);
      rep.fit_closure = fit_rational(clo, degree);
      rep.same_denominator = rep.fit_rational_class && rep.fit_closure &&
                             rep.fit_rational_class->den() == rep.fit_closure->den();
    }
  }
  return rep;
}

} // namespace permlab
