#pragma once

#include "permlab/antichain.hpp"
#include "permlab/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permlab {

/// Σ x^{|π|} over a finite set.
Poly gf_finite_set(const std::vector<Permutation> &set);

/// x^{2(k+1)} a² / (1 − a), a the generating polynomial of spec.A.
RationalGF gf_antichain(const AntichainSpec &spec);

/// The closure generating function assembled exactly as the rationality
/// argument writes it, with its factors kept for reporting.
struct ClosureGFParts {
  Poly a;                 // generating polynomial of the closure of A
  RationalGF two_anchor;  // sum-indecomposable members with both anchors
  RationalGF beginnings;  // 1 + x^{k+1}/(1 − a)
  RationalGF middles;     // 1 / (1 − (a + a³)/(1 − a))
  RationalGF endings;     // 1 + x^{k+1} + 2x^{k+1}a/(1 − a)
  RationalGF total;       // two_anchor + beginnings·middles·endings − 1
};

/// Requires spec.tau.
ClosureGFParts gf_closure_paper(const AntichainSpec &spec);

struct GrowthResult {
  double rate = 0.0;
  /// Least positive root of the denominator, when one was located.
  std::optional<double> root;
  /// True when rate is only an upper bound (no positive root was found).
  bool bound_only = false;
  /// Dominant root unique in modulus (check_dominant_root).
  bool dominant_unique = false;
  std::string diagnostic;
};

/// Least positive root of p by a grid scan for the first sign change followed
/// by bisection to 1e-12. The bracket starts at [1e-9, 1] and doubles up to
/// 2^20 when p has no sign change inside it.
std::optional<double> least_positive_root(const Poly &p);

GrowthResult growth_rate(const RationalGF &gf);

struct DominantRootReport {
  bool unique = false;
  double radius = 0.0;
  /// Smallest |den| sampled on the circle outside the arc |arg z| < 0.1.
  double min_modulus_off_arc = 0.0;
  double argument_of_min = 0.0;
  double value_at_minus_radius = 0.0;
  /// gcd of the exponents carrying nonzero coefficients (constant excluded);
  /// a value above 1 forces several roots of equal modulus.
  int support_gcd = 0;
  std::string diagnostic;
};

DominantRootReport check_dominant_root(const Poly &den, int samples = 20000);

/// Exact rational function of least denominator degree (then least numerator
/// degree) reproducing every given coefficient. The last `held_out` terms are
/// not used for the solve, only to confirm the prediction. Requires
/// series.terms() >= 2*max_den_degree + 4.
std::optional<RationalGF> fit_rational(const Series &series, int max_den_degree,
                                       int held_out = 4);

/// Series from explicit counts c_1..c_N.
Series series_from_counts(const std::vector<BigInt> &counts);

} // namespace permlab
