#pragma once

// Exact resultants and discriminants.
//
// Library-wide contract: both operations follow the root-product
// definitions for monic polynomials,
//
//     disc(P) = prod_{i<j} (a_i - a_j)^2,   res(P,Q) = prod_{i,j} (a_i - b_j),
//
// so non-monic inputs are normalized to monic first.  A degree <= 1
// discriminant and a resultant against a constant are empty products (= 1).
//
// The workhorse is the subresultant remainder sequence over Z[i] after
// clearing denominators; root products are only used on the numeric side
// (see marked.hpp / roots.hpp).

#include "wronsky/gaussint.hpp"
#include "wronsky/poly.hpp"

#include <utility>
#include <vector>

namespace wronsky {
namespace detail {

inline Int pow_ring(const Int& x, unsigned n) {
  Int r = 1, b = x;
  while (n) {
    if (n & 1u) r *= b;
    b *= b;
    n >>= 1u;
  }
  return r;
}
inline GaussInt pow_ring(const GaussInt& x, unsigned n) { return x.pow(n); }

inline bool ring_is_zero(const Int& x) { return x == 0; }
inline bool ring_is_zero(const GaussInt& x) { return x.is_zero(); }

// Dense ascending coefficients over a ring (Int or GaussInt); trailing
// zeros stripped.  Minimal: only what the PRS needs.
template <class R>
struct RingPoly {
  std::vector<R> c;

  void strip() {
    while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }
  const R& lc() const { return c.back(); }
};

template <class R>
RingPoly<R> ring_exact_div(const RingPoly<R>& a, const R& s) {
  RingPoly<R> out = a;
  for (R& x : out.c) x = exact_div(x, s);
  return out;
}

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B.
/// Multiply-only long division, no ring divisions.
template <class R>
RingPoly<R> prem(RingPoly<R> r, const RingPoly<R>& b) {
  const int db = b.deg();
  const R& blc = b.lc();
  int e = r.deg() - db + 1;
  while (!r.is_zero() && r.deg() >= db) {
    // r <- blc * r - lc(r) * x^(deg r - db) * b
    const int shift = r.deg() - db;
    R rlc = r.lc();
    for (R& x : r.c) x *= blc;
    for (int j = 0; j <= db; ++j) r.c[size_t(shift + j)] -= rlc * b.c[size_t(j)];
    r.strip();
    --e;
  }
  if (e > 0) {
    R s = pow_ring(blc, unsigned(e));
    for (R& x : r.c) x *= s;
  }
  return r;
}

/// Standard (Sylvester) resultant over an integral domain via the
/// subresultant PRS.  Res of two constants is 1; Res(A, b) = b^deg A.
template <class R>
R subresultant_resultant(RingPoly<R> a, RingPoly<R> b) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("resultant: zero polynomial");
  bool negate = false;
  if (a.deg() < b.deg()) {
    if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
    std::swap(a, b);
  }
  if (b.deg() == 0) {
    R v = pow_ring(b.lc(), unsigned(a.deg()));
    return negate ? R(0) - v : v;
  }
  R g(1), h(1);
  while (true) {
    const int da = a.deg(), db = b.deg();
    const int delta = da - db;
    if ((da & 1) && (db & 1)) negate = !negate;
    RingPoly<R> r = prem(a, b);
    a = std::move(b);
    if (r.is_zero()) return R(0);
    b = ring_exact_div(r, g * pow_ring(h, unsigned(delta)));
    g = a.lc();
    if (delta > 0)
      h = exact_div(pow_ring(g, unsigned(delta)),
                    pow_ring(h, unsigned(delta - 1)));
    if (b.deg() == 0) {
      const int dA = a.deg();
      R v = exact_div(pow_ring(b.lc(), unsigned(dA)),
                      pow_ring(h, unsigned(dA - 1)));
      return negate ? R(0) - v : v;
    }
  }
}

/// Clear denominators: Gaussian-integer polynomial Q with Q = D * p.
struct ClearedPoly {
  RingPoly<GaussInt> q;
  Int den = 1;
};

inline ClearedPoly clear_denominators(const Poly<GaussRat>& p) {
  Int d = 1;
  for (const GaussRat& c : p.coeffs()) {
    d = lcm(d, denominator(c.re));
    d = lcm(d, denominator(c.im));
  }
  ClearedPoly out;
  out.den = d;
  out.q.c.reserve(p.coeffs().size());
  for (const GaussRat& c : p.coeffs()) {
    Rational re = c.re * d, im = c.im * d;
    out.q.c.push_back(GaussInt(numerator(re), numerator(im)));
  }
  out.q.strip();
  return out;
}

inline GaussRat std_resultant_exact(const Poly<GaussRat>& p,
                                    const Poly<GaussRat>& q) {
  ClearedPoly cp = clear_denominators(p);
  ClearedPoly cq = clear_denominators(q);
  GaussInt r = subresultant_resultant(cp.q, cq.q);
  // Res(c*P, Q) = c^deg Q * Res(P, Q)
  Rational scale = Rational(1) /
                   (Rational(pow_ring(cp.den, unsigned(q.degree()))) *
                    Rational(pow_ring(cq.den, unsigned(p.degree()))));
  GaussRat out = to_gauss_rat(r);
  return {out.re * scale, out.im * scale};
}

}  // namespace detail

/// Root-product resultant of the monic normalizations, exact.
inline GaussRat resultant(const Poly<GaussRat>& p, const Poly<GaussRat>& q) {
  if (p.is_zero() || q.is_zero())
    throw std::domain_error("resultant: zero polynomial");
  if (p.degree() == 0 || q.degree() == 0) return GaussRat(1);
  return detail::std_resultant_exact(p.monic(), q.monic());
}

/// Root-product discriminant of the monic normalization, exact.
/// Degree <= 1 gives the empty product 1.
inline GaussRat discriminant(const Poly<GaussRat>& p) {
  if (p.is_zero()) throw std::domain_error("discriminant: zero polynomial");
  const int d = p.degree();
  if (d <= 1) return GaussRat(1);
  Poly<GaussRat> m = p.monic();
  GaussRat r = detail::std_resultant_exact(m, m.derivative());
  // disc = (-1)^(d(d-1)/2) * Res(P, P') for monic P
  if ((long(d) * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace wronsky
