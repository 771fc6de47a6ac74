#pragma once

// Gaussian integers.  The subresultant remainder sequence runs over an
// integral domain; clearing rational denominators from GaussRat
// coefficients lands here.

#include "wronsky/scalars.hpp"

#include <stdexcept>

namespace wronsky {

struct GaussInt {
  Int re;
  Int im;

  GaussInt() = default;
  GaussInt(long v) : re(v) {}  // NOLINT
  GaussInt(Int r) : re(std::move(r)) {}  // NOLINT
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }
  Int norm() const { return re * re + im * im; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator+=(const GaussInt& o) { return *this = *this + o; }
  GaussInt& operator-=(const GaussInt& o) { return *this = *this - o; }
  GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussInt& a, const GaussInt& b) {
    return !(a == b);
  }

  GaussInt pow(unsigned n) const {
    GaussInt r(1), b = *this;
    while (n) {
      if (n & 1u) r *= b;
      b *= b;
      n >>= 1u;
    }
    return r;
  }
};

/// Exact quotient a/b; throws if b does not divide a in Z[i].
inline GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw std::domain_error("GaussInt: division by zero");
  GaussInt num = a * b.conj();
  Int n = b.norm();
  Int qr = num.re / n, qi = num.im / n;
  if (qr * n != num.re || qi * n != num.im)
    throw std::domain_error("GaussInt: inexact division");
  return {qr, qi};
}

inline Int exact_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a) throw std::domain_error("Int: inexact division");
  return q;
}

inline GaussRat to_gauss_rat(const GaussInt& z) {
  return {Rational(z.re), Rational(z.im)};
}

}  // namespace wronsky
