#include "permlab/poly.hpp"

#include "permlab/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <sstream>

namespace permlab {

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs)
    c_.emplace_back(c);
  trim();
}

Poly Poly::constant(const BigInt &c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(const BigInt &c, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

BigInt Poly::operator[](int i) const {
  if (i < 0 || i > degree())
    return 0;
  return c_[i];
}

Poly Poly::operator+(const Poly &rhs) const {
  std::vector<BigInt> v(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (*this)[static_cast<int>(i)] + rhs[static_cast<int>(i)];
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<BigInt> v(c_);
  for (auto &x : v)
    x = -x;
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly &rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly &rhs) const {
  if (is_zero() || rhs.is_zero())
    return {};
  std::vector<BigInt> v(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      v[i + j] += c_[i] * rhs.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const BigInt &s) const {
  std::vector<BigInt> v(c_);
  for (auto &x : v)
    x *= s;
  return Poly(std::move(v));
}

Poly Poly::compose(const Poly &inner) const {
  // Horner in the ring of polynomials.
  Poly out;
  for (int i = degree(); i >= 0; --i)
    out = out * inner + Poly::constant(c_[i]);
  return out;
}

Poly Poly::truncated(int n) const {
  std::vector<BigInt> v(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), std::max(n, 0)));
  return Poly(std::move(v));
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto &x : c_)
    g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

Poly Poly::divided_by(const BigInt &s) const {
  std::vector<BigInt> v(c_);
  for (auto &x : v) {
    if (x % s != 0)
      throw InvalidInput("polynomial coefficient not divisible");
    x /= s;
  }
  return Poly(std::move(v));
}

double Poly::evaluate(double x) const {
  double acc = 0.0;
  for (int i = degree(); i >= 0; --i)
    acc = acc * x + c_[i].convert_to<double>();
  return acc;
}

std::complex<double> Poly::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (int i = degree(); i >= 0; --i)
    acc = acc * z + c_[i].convert_to<double>();
  return acc;
}

std::string Poly::pretty(const std::string &var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigInt &c = c_[i];
    if (c == 0)
      continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (i == 0 || mag != 1)
      os << mag;
    if (i > 0) {
      if (i == 0 || mag != 1)
        os << "*";
      os << var;
      if (i > 1)
        os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

using RPoly = std::vector<BigRational>;

void rtrim(RPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

RPoly to_rational(const Poly &p) {
  return RPoly(p.coeffs().begin(), p.coeffs().end());
}

RPoly rmod(RPoly a, const RPoly &b) {
  rtrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= f * b[i];
    a.pop_back();
    rtrim(a);
  }
  return a;
}

Poly primitive_part(const RPoly &p) {
  BigInt lcm = 1;
  for (const auto &c : p) {
    BigInt d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> v;
  for (const auto &c : p)
    v.push_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
  Poly out(std::move(v));
  if (out.is_zero())
    return out;
  out = out.divided_by(out.content());
  if (out.coeffs().back() < 0)
    out = -out;
  return out;
}

} // namespace

Poly poly_gcd(const Poly &a, const Poly &b) {
  RPoly x = to_rational(a), y = to_rational(b);
  rtrim(x);
  rtrim(y);
  while (!y.empty()) {
    RPoly r = rmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

namespace {

// Exact quotient of a by b where b divides a over Q and the result is integral
// up to the content adjustments done by the caller.
Poly exact_div(const Poly &a, const Poly &b) {
  RPoly r = to_rational(a);
  const RPoly d = to_rational(b);
  if (a.is_zero())
    return {};
  RPoly q(r.size() - d.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = r[i + d.size() - 1] / d.back();
    for (std::size_t j = 0; j < d.size(); ++j)
      r[i + j] -= q[i] * d[j];
  }
  std::vector<BigInt> v;
  for (const auto &c : q) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::logic_error("exact_div: non-integral quotient");
    v.push_back(boost::multiprecision::numerator(c));
  }
  return Poly(std::move(v));
}

} // namespace

RationalGF::RationalGF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw InvalidInput("rational function with zero denominator");
  canonicalize();
}

void RationalGF::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly{1};
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    // g is primitive, so by Gauss's lemma both quotients are integral.
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (den_[0] == 0)
    throw InvalidInput("denominator vanishes at 0: " + den_.pretty() +
                       " (not a power series)");
  BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
  if (den_[0] < 0)
    c = -c;
  num_ = num_.divided_by(c);
  den_ = den_.divided_by(c);
}

RationalGF RationalGF::operator+(const RationalGF &rhs) const {
  return RationalGF(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalGF RationalGF::operator-(const RationalGF &rhs) const {
  return RationalGF(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalGF RationalGF::operator*(const RationalGF &rhs) const {
  return RationalGF(num_ * rhs.num_, den_ * rhs.den_);
}

RationalGF RationalGF::reciprocal() const {
  if (num_[0] == 0)
    throw InvalidInput("reciprocal of a series with zero constant term");
  return RationalGF(den_, num_);
}

RationalGF RationalGF::substitute(const Poly &inner) const {
  if (inner[0] != 0)
    throw InvalidInput("substitution requires an inner polynomial with zero "
                       "constant term");
  return RationalGF(num_.compose(inner), den_.compose(inner));
}

bool RationalGF::operator==(const RationalGF &rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

std::string RationalGF::pretty(const std::string &var) const {
  if (den_ == Poly{1})
    return num_.pretty(var);
  return "(" + num_.pretty(var) + ") / (" + den_.pretty(var) + ")";
}

BigInt Series::at(int n) const {
  const int i = n - n_min;
  if (i < 0 || i >= terms())
    return 0;
  return coeffs[i];
}

Series series_expand(const RationalGF &gf, int N) {
  if (N < 1)
    throw InvalidInput("series_expand: N must be >= 1");
  const Poly &num = gf.num();
  const Poly &den = gf.den();
  const BigInt d0 = den[0];
  // f[n] = (num[n] - sum_{j>=1} den[j] f[n-j]) / den[0]
  std::vector<BigInt> f(N + 1);
  for (int n = 0; n <= N; ++n) {
    BigInt acc = num[n];
    for (int j = 1; j <= std::min(n, den.degree()); ++j)
      acc -= den[j] * f[n - j];
    if (acc % d0 != 0)
      throw InvalidInput("series_expand: non-integral coefficient at x^" +
                         std::to_string(n));
    f[n] = acc / d0;
  }
  Series s;
  s.coeffs.assign(f.begin() + 1, f.end());
  return s;
}

} // namespace permlab
