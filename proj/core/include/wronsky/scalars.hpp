#pragma once

// Scalar domains used throughout the library.
//
// Exact side: arbitrary-size rationals and Gaussian rationals (complex
// numbers with rational real/imaginary part).  All problem data (marked
// points, Schubert indices, the target Wronskian) lives here, so counting
// questions are never at the mercy of rounding.
//
// Numeric side: binary floating complex numbers at a fixed bit precision.
// The precision ladder used by the solver instantiates the same templated
// code at 128, 256, 512 and 1024 bits.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wronsky {

namespace mp = boost::multiprecision;

using Int = mp::cpp_int;
using Rational = mp::cpp_rational;

template <unsigned Bits>
using Real = mp::number<mp::cpp_bin_float<Bits, mp::digit_base_2>, mp::et_off>;

template <unsigned Bits>
using Complex =
    mp::number<mp::complex_adaptor<mp::cpp_bin_float<Bits, mp::digit_base_2>>,
               mp::et_off>;

using Real128 = Real<128>;
using Complex128 = Complex<128>;
using Complex256 = Complex<256>;
using Complex512 = Complex<512>;
using Complex1024 = Complex<1024>;

/// Complex number with exact rational real and imaginary parts.
struct GaussRat {
  Rational re;
  Rational im;

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GaussRat(long v) : re(v) {}                 // NOLINT
  GaussRat(int v) : re(v) {}                  // NOLINT
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRat conj() const { return {re, -im}; }
  /// |z|^2, exact.
  Rational norm() const { return re * re + im * im; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rational n = b.norm();
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    GaussRat c = a * b.conj();
    return {c.re / n, c.im / n};
  }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
  /// Lexicographic order; used for canonical sorting, not magnitude.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string str() const {
    if (im == 0) return re.str();
    return "(" + re.str() + (im < 0 ? "-" : "+") + Rational(abs(im)).str() + "i)";
  }
};

// ---------------------------------------------------------------------------
// Scalar traits.  `is_exact` selects between exact equality tests / exact
// linear algebra and the thresholded numeric equivalents.

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr unsigned precision_bits = 0;
  using real_type = Rational;
};

template <>
struct scalar_traits<GaussRat> {
  static constexpr bool is_exact = true;
  static constexpr unsigned precision_bits = 0;
  using real_type = Rational;
};

template <unsigned Bits>
struct scalar_traits<Complex<Bits>> {
  static constexpr bool is_exact = false;
  static constexpr unsigned precision_bits = Bits;
  using real_type = Real<Bits>;
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::is_exact;

template <class T>
using real_type_t = typename scalar_traits<T>::real_type;

// ---------------------------------------------------------------------------
// Generic helpers.

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const GaussRat& x) { return x.is_zero(); }
template <unsigned Bits>
bool is_zero(const Complex<Bits>& x) {
  return x.real() == 0 && x.imag() == 0;
}

inline GaussRat conj_of(const GaussRat& x) { return x.conj(); }
inline Rational conj_of(const Rational& x) { return x; }
template <unsigned Bits>
Complex<Bits> conj_of(const Complex<Bits>& x) {
  return conj(x);
}

/// Magnitude used for pivot selection and defect reporting.  For exact
/// scalars this is the L1 surrogate |re|+|im| (any norm works for pivoting
/// and it avoids square roots outside the field).
inline Rational magnitude(const Rational& x) { return abs(x); }
inline Rational magnitude(const GaussRat& x) { return abs(x.re) + abs(x.im); }
template <unsigned Bits>
Real<Bits> magnitude(const Complex<Bits>& x) {
  return abs(x);
}

template <unsigned Bits>
Real<Bits> to_real(const Rational& q) {
  return Real<Bits>(numerator(q)) / Real<Bits>(denominator(q));
}

/// Rational -> target scalar.
template <class T>
T scalar_from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else if constexpr (std::is_same_v<T, GaussRat>) {
    return GaussRat(q);
  } else {
    return T(to_real<scalar_traits<T>::precision_bits>(q));
  }
}

/// GaussRat -> target scalar.  Converting to Rational requires a real value.
template <class T>
T scalar_from_gauss(const GaussRat& z) {
  if constexpr (std::is_same_v<T, GaussRat>) {
    return z;
  } else if constexpr (std::is_same_v<T, Rational>) {
    if (!z.is_real())
      throw std::domain_error("scalar_from_gauss: complex value in rational context");
    return z.re;
  } else {
    constexpr unsigned B = scalar_traits<T>::precision_bits;
    return T(to_real<B>(z.re), to_real<B>(z.im));
  }
}

/// Widen a complex value to a higher-precision rung (value-preserving).
template <class To, class From>
To widen(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else {
    using RT = typename To::value_type;
    return To(RT(x.real()), RT(x.imag()));
  }
}

}  // namespace wronsky
