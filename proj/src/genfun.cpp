#include "permlab/genfun.hpp"

#include "permlab/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <complex>
#include <numeric>
#include <numbers>
#include <set>
#include <sstream>

namespace permlab {

Poly gf_finite_set(const std::vector<Permutation> &set) {
  std::vector<BigInt> c;
  for (const auto &p : set) {
    if (p.empty())
      continue;
    if (static_cast<int>(c.size()) <= p.size())
      c.resize(p.size() + 1);
    c[p.size()] += 1;
  }
  return Poly(std::move(c));
}

RationalGF gf_antichain(const AntichainSpec &spec) {
  const Poly a = gf_finite_set(spec.A);
  const Poly lead = Poly::monomial(1, 2 * (spec.k + 1));
  return RationalGF(lead * a * a, Poly{1} - a);
}

namespace {

Poly closure_polynomial(const std::vector<Permutation> &A) {
  std::set<Permutation> down;
  for (const auto &a : A)
    for (auto &p : patterns(a))
      down.insert(std::move(p));
  return gf_finite_set(std::vector<Permutation>(down.begin(), down.end()));
}

} // namespace

ClosureGFParts gf_closure_paper(const AntichainSpec &spec) {
  if (!spec.tau)
    throw InvalidInput("closure generating function requires a spec built from tau");
  ClosureGFParts out;
  out.a = closure_polynomial(spec.A);
  const RationalGF a = RationalGF::from_poly(out.a);
  const RationalGF one = RationalGF::from_poly(Poly{1});
  const RationalGF X = RationalGF::from_poly(Poly::monomial(1, spec.k + 1));
  const RationalGF inv_one_minus_a = (one - a).reciprocal();

  out.two_anchor = X * X * a * a * inv_one_minus_a;
  out.beginnings = one + X * inv_one_minus_a;

  // Increasing oscillations by length, (x + x³)/(1 − x), with a substituted for x.
  const RationalGF oscillations(Poly{0, 1, 0, 1}, Poly{1, -1});
  out.middles = (one - oscillations.substitute(out.a)).reciprocal();

  out.endings = one + X + RationalGF::from_poly(Poly{2}) * X * a * inv_one_minus_a;
  out.total = out.two_anchor + out.beginnings * out.middles * out.endings - one;
  return out;
}

// ---------------------------------------------------------------------------

std::optional<double> least_positive_root(const Poly &p) {
  if (p.degree() < 1)
    return std::nullopt;
  constexpr double lo0 = 1e-9;
  constexpr int grid = 4096;
  for (double hi = 1.0; hi <= 1048576.0; hi *= 2.0) {
    const double base = (hi == 1.0) ? lo0 : hi / 2.0;
    double a = base;
    double fa = p.evaluate(a);
    if (fa == 0.0)
      return a;
    const double step = (hi - base) / grid;
    for (int i = 1; i <= grid; ++i) {
      const double b = (i == grid) ? hi : base + step * i;
      const double fb = p.evaluate(b);
      if (fb == 0.0)
        return b;
      if ((fa < 0) != (fb < 0)) {
        double l = a, r = b;
        while (r - l > 1e-12) {
          const double mid = 0.5 * (l + r);
          const double fm = p.evaluate(mid);
          if (fm == 0.0)
            return mid;
          if ((fm < 0) == (fa < 0))
            l = mid;
          else
            r = mid;
        }
        return 0.5 * (l + r);
      }
      a = b;
      fa = fb;
    }
  }
  return std::nullopt;
}

GrowthResult growth_rate(const RationalGF &gf) {
  GrowthResult out;
  const Poly &den = gf.den();
  if (den.degree() < 1) {
    out.rate = 0.0;
    out.bound_only = true;
    out.diagnostic = "polynomial generating function: finitely many members";
    return out;
  }
  out.root = least_positive_root(den);
  if (!out.root) {
    out.rate = 1.0;
    out.bound_only = true;
    out.diagnostic = "denominator has no sign change on (0, 2^20]; growth <= 1";
    return out;
  }
  out.rate = 1.0 / *out.root;
  const auto dom = check_dominant_root(den);
  out.dominant_unique = dom.unique;
  out.diagnostic = dom.diagnostic;
  return out;
}

DominantRootReport check_dominant_root(const Poly &den, int samples) {
  DominantRootReport rep;
  for (int i = 1; i <= den.degree(); ++i)
    if (den[i] != 0)
      rep.support_gcd = std::gcd(rep.support_gcd, i);

  const auto root = least_positive_root(den);
  if (!root) {
    rep.diagnostic = "no positive root located";
    return rep;
  }
  const double r = *root;
  rep.radius = r;
  auto modulus = [&](double theta) {
    return std::abs(den.evaluate(std::polar(r, theta)));
  };

  constexpr double arc = 0.1;
  const double two_pi = 2.0 * std::numbers::pi;
  const double step = (two_pi - 2 * arc) / samples;
  std::vector<double> values(samples + 1);
  for (int i = 0; i <= samples; ++i)
    values[i] = modulus(arc + step * i);

  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const bool local_min = (i == 0 || values[i] <= values[i - 1]) &&
                           (i == samples || values[i] <= values[i + 1]);
    if (!local_min)
      continue;
    // Golden-section refinement inside the neighbouring cells.
    double a = arc + step * std::max(0, i - 1);
    double b = arc + step * std::min(samples, i + 1);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a), d = a + g * (b - a);
    for (int it = 0; it < 80; ++it) {
      if (modulus(c) < modulus(d))
        b = d;
      else
        a = c;
      c = b - g * (b - a);
      d = a + g * (b - a);
    }
    const double theta = 0.5 * (a + b);
    const double v = std::min(values[i], modulus(theta));
    if (v < best) {
      best = v;
      best_theta = theta;
    }
  }
  rep.min_modulus_off_arc = best;
  rep.argument_of_min = best_theta;
  rep.value_at_minus_radius = std::abs(den.evaluate(-r));
  rep.unique = best > 1e-6 && rep.value_at_minus_radius > 1e-6;

  std::ostringstream os;
  os.precision(12);
  os << "r=" << r << ", min |den| on circle off arc=" << best << " at arg "
     << best_theta << ", |den(-r)|=" << rep.value_at_minus_radius
     << ", support gcd=" << rep.support_gcd;
  if (!rep.unique) {
    os << "; another root omega*r with |omega|=1 exists";
    if (rep.support_gcd > 1)
      os << " (exponent support has gcd " << rep.support_gcd
         << ", so omega may be any " << rep.support_gcd << "-th root of unity)";
  }
  rep.diagnostic = os.str();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

using Rat = BigRational;

// Solves M q = rhs (rows x cols) by Gaussian elimination; nullopt when
// inconsistent or when the solution is not unique.
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0)
      ++piv;
    if (piv == rows)
      return std::nullopt; // free column: not unique
    std::swap(M[piv], M[r]);
    std::swap(rhs[piv], rhs[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0)
        continue;
      const Rat f = M[i][c] / M[r][c];
      for (std::size_t j = c; j < cols; ++j)
        M[i][j] -= f * M[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() < cols)
    return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0)
      return std::nullopt;
  std::vector<Rat> q(cols);
  for (std::size_t i = 0; i < cols; ++i)
    q[pivot_col[i]] = rhs[i] / M[i][pivot_col[i]];
  return q;
}

Poly integral_multiple(const std::vector<Rat> &c) {
  BigInt lcm = 1;
  for (const auto &x : c) {
    const BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> v;
  for (const auto &x : c)
    v.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
  return Poly(std::move(v));
}

} // namespace

std::optional<RationalGF> fit_rational(const Series &series, int max_den_degree, int held_out) {
  const int N = series.terms();
  if (max_den_degree < 0 || N < 2 * max_den_degree + 4)
    throw InvalidInput("fit_rational: need at least 2*max_den_degree+4 terms (have " +
                       std::to_string(N) + ")");
  held_out = std::clamp(held_out, 0, N);
  const int T = N - held_out; // highest exponent used in the solve
  // s[n] for n = 0..N; coefficients below n_min are zero.
  std::vector<Rat> s(N + 1);
  for (int n = 0; n <= N; ++n)
    s[n] = Rat(series.at(n));

  for (int d = 0; d <= max_den_degree; ++d) {
    for (int p = 0; p + d + 1 <= T; ++p) {
      // Unknowns q_1..q_d, q_0 = 1; for n in p+1..T: Σ_j q_j s[n-j] = 0.
      std::vector<std::vector<Rat>> M;
      std::vector<Rat> rhs;
      for (int n = p + 1; n <= T; ++n) {
        std::vector<Rat> row(d);
        for (int j = 1; j <= d; ++j)
          row[j - 1] = n - j >= 0 ? s[n - j] : Rat(0);
        M.push_back(std::move(row));
        rhs.push_back(-s[n]);
      }
      std::optional<std::vector<Rat>> q;
      if (d == 0) {
        bool zero = true;
        for (const auto &x : rhs)
          zero = zero && x == 0;
        if (zero)
          q = std::vector<Rat>{};
      } else {
        q = solve_unique(M, rhs);
      }
      if (!q)
        continue;
      std::vector<Rat> den(d + 1);
      den[0] = 1;
      for (int j = 1; j <= d; ++j)
        den[j] = (*q)[j - 1];
      std::vector<Rat> num(p + 1);
      for (int n = 0; n <= p; ++n)
        for (int j = 0; j <= std::min(n, d); ++j)
          num[n] += den[j] * s[n - j];
      std::vector<Rat> both(num);
      both.insert(both.end(), den.begin(), den.end());
      const Poly scaled = integral_multiple(both);
      std::vector<BigInt> nc, dc;
      for (int i = 0; i <= p; ++i)
        nc.push_back(scaled[i]);
      for (int i = 0; i <= d; ++i)
        dc.push_back(scaled[p + 1 + i]);
      RationalGF gf;
      try {
        gf = RationalGF(Poly(std::move(nc)), Poly(std::move(dc)));
      } catch (const InvalidInput &) {
        continue;
      }
      try {
        if (series_expand(gf, N).coeffs == series.coeffs &&
            series.n_min == 1)
          return gf;
      } catch (const InvalidInput &) {
        // Non-integral expansion: not a fit.
      }
    }
  }
  return std::nullopt;
}

Series series_from_counts(const std::vector<BigInt> &counts) {
  Series s;
  s.coeffs = counts;
  return s;
}

} // namespace permlab
