#pragma once

// Complex root finding for numeric polynomials: Aberth-Ehrlich simultaneous
// iteration from a scaled annulus, followed by per-root Newton polishing.
// The certificate is residual-based: every returned root r satisfies
// |P(r)| <= 2^-(prec-10) * ||P||_inf, which is reachable for multiple roots
// even though the root error itself scales like eps^(1/multiplicity).

#include "wronsky/poly.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wronsky {

struct NumericError : std::runtime_error {
  double worst_residual;
  explicit NumericError(const std::string& what, double res = 0.0)
      : std::runtime_error(what), worst_residual(res) {}
};

namespace detail {

template <unsigned B>
Real<B> root_radius_bound(const Poly<Complex<B>>& p) {
  // Fujiwara-style bound: 2 * max_i |c_i / c_n|^(1/(n-i))
  using R = Real<B>;
  const int n = p.degree();
  R an = abs(p.lc());
  R bound(0);
  for (int i = 0; i < n; ++i) {
    R ci = abs(p.coeff(i));
    if (ci == 0) continue;
    R ratio = ci / an;
    R root = pow(ratio, R(1) / R(n - i));
    bound = std::max(bound, root);
  }
  return 2 * bound + R(1) / R(1024);
}

}  // namespace detail

/// All roots of P with multiplicity.  Throws NumericError (carrying the
/// worst residual) if the retry budget is exhausted before certification.
template <unsigned B>
std::vector<Complex<B>> roots(const Poly<Complex<B>>& p_in) {
  using C = Complex<B>;
  using R = Real<B>;
  if (p_in.is_zero()) throw std::domain_error("roots: zero polynomial");

  Poly<C> p = p_in;
  std::vector<C> out;
  // exact zero roots come off first
  while (!p.is_zero() && p.degree() >= 1 && is_zero(p.coeff(0))) {
    out.push_back(C(0));
    p = p.deflate(C(0));
  }
  const int n = p.degree();
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(-p.coeff(0) / p.coeff(1));
    return out;
  }

  const R norm = max_coeff_magnitude(p);
  const R target = ldexp(norm, -int(B - 10));
  const Poly<C> dp = p.derivative();

  const R pi = boost::math::constants::pi<R>();
  R radius = detail::root_radius_bound(p);

  double worst = 0.0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    // staggered points on circles inside the root bound
    std::vector<C> z(size_t(n), C(0));
    for (int i = 0; i < n; ++i) {
      R theta = 2 * pi * R(i) / R(n) + R(1) / R(8) + R(attempt) / R(3);
      R r = radius * (R(4 + ((i + attempt) % 3)) / R(6));
      z[size_t(i)] = C(r * cos(theta), r * sin(theta));
    }

    const int max_iter = 80 + 60 * int(B) / 128 + 200 * attempt;
    for (int iter = 0; iter < max_iter; ++iter) {
      R max_step(0);
      for (int i = 0; i < n; ++i) {
        C fi = p(z[size_t(i)]);
        C dfi = dp(z[size_t(i)]);
        C sum(0);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          C diff = z[size_t(i)] - z[size_t(j)];
          if (is_zero(diff)) diff = C(ldexp(R(1), -int(B)));
          sum += C(1) / diff;
        }
        C denom = dfi - fi * sum;
        if (is_zero(denom)) continue;
        C w = fi / denom;
        z[size_t(i)] -= w;
        max_step = std::max(max_step, abs(w));
      }
      if (max_step <= ldexp(R(1), -int(B - 6)) * (R(1) + radius)) break;
    }

    // Newton polish, individually
    for (C& r : z) {
      for (int it = 0; it < 8; ++it) {
        C f = p(r);
        if (abs(f) <= target) break;
        C df = dp(r);
        if (is_zero(df)) break;
        C step = f / df;
        C cand = r - step;
        if (abs(p(cand)) < abs(f)) r = cand; else break;
      }
    }

    R w(0);
    for (const C& r : z) w = std::max(w, abs(p(r)));
    if (w <= target) {
      out.insert(out.end(), z.begin(), z.end());
      return out;
    }
    worst = double(w / (norm == 0 ? R(1) : norm));
    radius *= R(3) / R(2);
  }
  throw NumericError("roots: residual target not reached", worst);
}

}  // namespace wronsky
