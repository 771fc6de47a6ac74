#pragma once

// Univariate polynomials over an arbitrary field scalar, dense ascending
// coefficient storage.  Poly<GaussRat> is the exact carrier (Wronskians,
// marked-point polynomials, operator coefficients); Poly<Complex<B>> is the
// numeric mirror used by the solver and reconstruction at a stated working
// precision.

#include "wronsky/scalars.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wronsky {

template <class K>
class Poly {
 public:
  /// Degree reported for the zero polynomial.  Deliberately not -1: callers
  /// must branch on is_zero() instead of doing arithmetic with the sentinel.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(K c0) {
    coeffs_.push_back(std::move(c0));
    strip();
  }
  Poly(std::initializer_list<K> cs) : coeffs_(cs) { strip(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(K(1)); }
  static Poly x() { return Poly({K(0), K(1)}); }

  static Poly from_coeffs(std::vector<K> cs) {
    Poly p;
    p.coeffs_ = std::move(cs);
    p.strip();
    return p;
  }

  /// Monic polynomial with the given roots (with multiplicity).
  static Poly from_roots(std::span<const K> roots) {
    Poly p = one();
    for (const K& r : roots) p = p * Poly({-r, K(1)});
    return p;
  }
  static Poly from_roots(const std::vector<K>& roots) {
    return from_roots(std::span<const K>(roots));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kZeroDegree : int(coeffs_.size()) - 1;
  }
  const std::vector<K>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero outside the stored range.
  K coeff(int i) const {
    if (i < 0 || size_t(i) >= coeffs_.size()) return K(0);
    return coeffs_[size_t(i)];
  }

  const K& lc() const {
    if (coeffs_.empty())
      throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == K(1); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return from_coeffs(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return from_coeffs(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<K> c = a.coeffs_;
    for (K& x : c) x = -x;
    return from_coeffs(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return from_coeffs(std::move(c));
  }
  friend Poly operator*(const Poly& a, const K& s) {
    std::vector<K> c = a.coeffs_;
    for (K& x : c) x *= s;
    return from_coeffs(std::move(c));
  }
  friend Poly operator*(const K& s, const Poly& a) { return a * s; }
  friend Poly operator/(const Poly& a, const K& s) {
    std::vector<K> c = a.coeffs_;
    for (K& x : c) x /= s;
    return from_coeffs(std::move(c));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<K> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
      c[i - 1] = coeffs_[i] * K(long(i));
    return from_coeffs(std::move(c));
  }

  Poly nth_derivative(int n) const {
    Poly p = *this;
    for (int i = 0; i < n; ++i) p = p.derivative();
    return p;
  }

  /// Antiderivative with integration constant zero.
  Poly antiderivative() const {
    if (is_zero()) return zero();
    std::vector<K> c(coeffs_.size() + 1, K(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      c[i + 1] = coeffs_[i] / K(long(i + 1));
    return from_coeffs(std::move(c));
  }

  K operator()(const K& x) const {
    K acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Poly monic() const {
    if (is_zero()) throw std::domain_error("Poly: monic of zero polynomial");
    return *this / lc();
  }

  Poly pow(unsigned n) const {
    Poly r = one();
    Poly b = *this;
    while (n) {
      if (n & 1u) r *= b;
      b *= b;
      n >>= 1u;
    }
    return r;
  }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    if (a.coeffs_.size() < b.coeffs_.size()) return {zero(), a};
    std::vector<K> rem = a.coeffs_;
    std::vector<K> quo(a.coeffs_.size() - b.coeffs_.size() + 1, K(0));
    const K& blc = b.coeffs_.back();
    for (size_t i = a.coeffs_.size(); i-- >= b.coeffs_.size();) {
      K q = rem[i] / blc;
      quo[i - (b.coeffs_.size() - 1)] = q;
      if (!wronsky::is_zero(q)) {
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
          rem[i - (b.coeffs_.size() - 1) + j] -= q * b.coeffs_[j];
      }
      rem[i] = K(0);  // cancel exactly, numeric included
      if (i == 0) break;
    }
    return {from_coeffs(std::move(quo)), from_coeffs(std::move(rem))};
  }

  /// Synthetic division by (x - r): returns the quotient, stores P(r) in
  /// `remainder` when requested.
  Poly deflate(const K& r, K* remainder = nullptr) const {
    if (is_zero()) {
      if (remainder) *remainder = K(0);
      return zero();
    }
    std::vector<K> q(coeffs_.size() > 1 ? coeffs_.size() - 1 : 0, K(0));
    K carry(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
      K v = coeffs_[i] + carry * r;
      if (i > 0)
        q[i - 1] = v;
      else if (remainder)
        *remainder = v;
      carry = v;
    }
    return from_coeffs(std::move(q));
  }

  /// Taylor coefficients of P around `at`: coefficients of (x-at)^k for
  /// k = 0..upto, by repeated synthetic division.
  std::vector<K> taylor(const K& at, int upto) const {
    std::vector<K> out;
    out.reserve(size_t(upto) + 1);
    Poly p = *this;
    for (int k = 0; k <= upto; ++k) {
      K rem(0);
      p = p.deflate(at, &rem);
      out.push_back(rem);
    }
    return out;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
      if (wronsky::is_zero(coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << scalar_str(coeffs_[i]);
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  static std::string scalar_str(const Rational& x) { return x.str(); }
  static std::string scalar_str(const GaussRat& x) { return x.str(); }
  template <unsigned B>
  static std::string scalar_str(const Complex<B>& x) {
    std::ostringstream os;
    os << x;
    return os.str();
  }

  void strip() {
    while (!coeffs_.empty() && wronsky::is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

using ExactPoly = Poly<GaussRat>;
template <unsigned Bits>
using NumPoly = Poly<Complex<Bits>>;

/// Largest coefficient magnitude; the norm used in root residual bounds.
template <class K>
real_type_t<K> max_coeff_magnitude(const Poly<K>& p) {
  real_type_t<K> m(0);
  for (const K& c : p.coeffs()) m = std::max(m, magnitude(c));
  return m;
}

/// Coefficient-wise conversion between scalar domains (exact -> numeric or
/// numeric widening).
template <class To, class From>
Poly<To> convert_poly(const Poly<From>& p) {
  std::vector<To> cs;
  cs.reserve(p.coeffs().size());
  for (const From& c : p.coeffs()) {
    if constexpr (std::is_same_v<From, GaussRat>) {
      cs.push_back(scalar_from_gauss<To>(c));
    } else if constexpr (std::is_same_v<From, Rational>) {
      cs.push_back(scalar_from_rational<To>(c));
    } else {
      cs.push_back(widen<To>(c));
    }
  }
  return Poly<To>::from_coeffs(std::move(cs));
}

}  // namespace wronsky
