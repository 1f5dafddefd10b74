#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer polynomial in one variable; coefficient i multiplies x^i. Kept
/// without trailing zeros, so the zero polynomial has no coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long long> coeffs);

  static Poly constant(const BigInt &c);
  static Poly monomial(const BigInt &c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt> &coeffs() const { return c_; }
  /// Zero beyond the degree.
  BigInt operator[](int i) const;

  Poly operator+(const Poly &rhs) const;
  Poly operator-(const Poly &rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly &rhs) const;
  Poly operator*(const BigInt &s) const;
  bool operator==(const Poly &rhs) const = default;

  /// p(inner(x)).
  Poly compose(const Poly &inner) const;
  /// Truncation to degrees < n.
  Poly truncated(int n) const;

  /// gcd of the coefficients (non-negative; zero for the zero polynomial).
  BigInt content() const;
  /// Exact division of every coefficient; throws if inexact.
  Poly divided_by(const BigInt &s) const;

  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  /// "1 - x^2 - x^3", ascending degree, variable name configurable.
  std::string pretty(const std::string &var = "x") const;

private:
  void trim();
  std::vector<BigInt> c_;
};

/// Primitive greatest common divisor with positive leading coefficient.
Poly poly_gcd(const Poly &a, const Poly &b);

/// num/den as a formal power series: gcd cancelled, den(0) > 0, and the common
/// integer content of num and den removed. Every generating function in this
/// library ends up with den(0) = 1.
class RationalGF {
public:
  RationalGF() : num_(), den_{1} {}
  RationalGF(Poly num, Poly den);
  static RationalGF from_poly(Poly p) { return RationalGF(std::move(p), Poly{1}); }

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }

  RationalGF operator+(const RationalGF &rhs) const;
  RationalGF operator-(const RationalGF &rhs) const;
  RationalGF operator*(const RationalGF &rhs) const;
  /// 1/f; requires a nonzero constant term in the numerator.
  RationalGF reciprocal() const;
  /// f(inner(x)); requires inner(0) = 0.
  RationalGF substitute(const Poly &inner) const;

  /// Equality as rational functions.
  bool operator==(const RationalGF &rhs) const;

  std::string pretty(const std::string &var = "x") const;

private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

/// Coefficients of x^1..x^N (index 0 holds x^1).
struct Series {
  int n_min = 1;
  std::vector<BigInt> coeffs;

  int terms() const { return static_cast<int>(coeffs.size()); }
  /// Coefficient of x^n, zero outside the stored range.
  BigInt at(int n) const;
  bool operator==(const Series &) const = default;
};

/// x^1..x^N coefficients through the linear recurrence given by the
/// denominator.
Series series_expand(const RationalGF &gf, int N);

} // namespace permlab
