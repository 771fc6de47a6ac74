#pragma once

// Marked point sets and the relative discriminant / resultant with respect
// to them.  A monic P factors uniquely as P = T * Z with Z carrying exactly
// the roots at the marked points and T(z_j) != 0; the relative quantities
// are then evaluated through their factored forms
//
//   disc_z(P)       = disc(T) * res(Z, T)^2
//   res_z(P1, P2)   = res(T1, T2) * res(T1, Z2) * res(T2, Z1)
//
// never by dividing full discriminants/resultants (which may be zero).

#include "wronsky/poly.hpp"
#include "wronsky/resultant.hpp"
#include "wronsky/roots.hpp"

#include <stdexcept>
#include <vector>

namespace wronsky {

/// Pairwise-distinct marked points, kept exact (Gaussian rationals).
struct MarkedPoints {
  std::vector<GaussRat> z;

  MarkedPoints() = default;
  explicit MarkedPoints(std::vector<GaussRat> pts) : z(std::move(pts)) {
    if (z.empty()) throw std::domain_error("MarkedPoints: empty");
    for (size_t i = 0; i < z.size(); ++i)
      for (size_t j = i + 1; j < z.size(); ++j)
        if (z[i] == z[j])
          throw std::domain_error("MarkedPoints: coincident points");
  }

  size_t size() const { return z.size(); }

  template <class C>
  std::vector<C> as() const {
    std::vector<C> out;
    out.reserve(z.size());
    for (const GaussRat& p : z) out.push_back(scalar_from_gauss<C>(p));
    return out;
  }

  /// Minimal pairwise distance, as a numeric value at the given precision.
  template <unsigned B>
  Real<B> min_separation() const {
    Real<B> best(-1);
    auto pts = as<Complex<B>>();
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        Real<B> d = abs(pts[i] - pts[j]);
        if (best < 0 || d < best) best = d;
      }
    return best;
  }
};

template <class K>
struct MarkedSplit {
  Poly<K> t;  // monic, no roots at marked points
  Poly<K> zpart;  // monic, all roots at marked points
  K lc;
};

/// Exact split: P = lc * T * Z, unique.
inline MarkedSplit<GaussRat> split_marked(const Poly<GaussRat>& p,
                                          const MarkedPoints& z) {
  if (p.is_zero()) throw std::domain_error("split_marked: zero polynomial");
  MarkedSplit<GaussRat> out;
  out.lc = p.lc();
  Poly<GaussRat> t = p.monic();
  Poly<GaussRat> zp = Poly<GaussRat>::one();
  for (const GaussRat& zj : z.z) {
    while (!t.is_zero() && t.degree() >= 1) {
      GaussRat rem;
      Poly<GaussRat> q = t.deflate(zj, &rem);
      if (!rem.is_zero()) break;
      t = q;
      zp *= Poly<GaussRat>({-zj, GaussRat(1)});
    }
  }
  out.t = t;
  out.zpart = zp;
  return out;
}

/// Numeric split by root clustering: a root is assigned to z_j when it lies
/// within sep/4 of it, sep being the minimal marked-point separation.
template <unsigned B>
MarkedSplit<Complex<B>> split_marked(const Poly<Complex<B>>& p,
                                     const MarkedPoints& z) {
  using C = Complex<B>;
  if (p.is_zero()) throw std::domain_error("split_marked: zero polynomial");
  MarkedSplit<C> out;
  out.lc = p.lc();
  if (p.degree() == 0) {
    out.t = Poly<C>::one();
    out.zpart = Poly<C>::one();
    return out;
  }
  Real<B> sep = z.min_separation<B>();
  if (z.size() == 1) sep = Real<B>(1);  // single point: any finite threshold
  auto pts = z.as<C>();
  std::vector<C> troots, zroots;
  for (const C& r : roots(p)) {
    bool assigned = false;
    for (const C& zj : pts) {
      if (abs(r - zj) < sep / 4) {
        zroots.push_back(zj);  // snap to the marked point itself
        assigned = true;
        break;
      }
    }
    if (!assigned) troots.push_back(r);
  }
  out.t = Poly<C>::from_roots(troots);
  out.zpart = Poly<C>::from_roots(zroots);
  return out;
}

// ---------------------------------------------------------------------------
// Numeric root-product discriminant / resultant (monic convention).

template <unsigned B>
Complex<B> resultant(const Poly<Complex<B>>& p, const Poly<Complex<B>>& q) {
  using C = Complex<B>;
  if (p.is_zero() || q.is_zero())
    throw std::domain_error("resultant: zero polynomial");
  if (p.degree() == 0 || q.degree() == 0) return C(1);
  C acc(1);
  auto pr = roots(p);
  auto qr = roots(q);
  for (const C& a : pr)
    for (const C& b : qr) acc *= (a - b);
  return acc;
}

template <unsigned B>
Complex<B> discriminant(const Poly<Complex<B>>& p) {
  using C = Complex<B>;
  if (p.is_zero()) throw std::domain_error("discriminant: zero polynomial");
  if (p.degree() <= 1) return C(1);
  auto rs = roots(p);
  C acc(1);
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j) {
      C d = rs[i] - rs[j];
      acc *= d * d;
    }
  return acc;
}

// ---------------------------------------------------------------------------
// Relative variants, via the factored forms.

template <class K>
K rel_discriminant(const Poly<K>& p, const MarkedPoints& z) {
  auto s = split_marked(p, z);
  K rzt = resultant(s.zpart, s.t);
  return discriminant(s.t) * rzt * rzt;
}

template <class K>
K rel_resultant(const Poly<K>& p1, const Poly<K>& p2, const MarkedPoints& z) {
  auto s1 = split_marked(p1, z);
  auto s2 = split_marked(p2, z);
  return resultant(s1.t, s2.t) * resultant(s1.t, s2.zpart) *
         resultant(s2.t, s1.zpart);
}

}  // namespace wronsky
