#pragma once

// Dense linear algebra at desk scale.  Exact kernels go through reduced row
// echelon form over the field; numeric kernels through a one-sided Jacobi
// SVD, with rank decided by a singular-value gap test so a borderline rank
// is an error (precision escalation) rather than a silent wrong answer.

#include "wronsky/scalars.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wronsky {

template <class K>
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, K(0)) {}
  K& at(size_t r, size_t c) { return a[r * cols + c]; }
  const K& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

/// Nullspace basis over an exact field, via RREF.
template <class K>
std::vector<std::vector<K>> kernel_exact(Matrix<K> m) {
  static_assert(is_exact_v<K>);
  const size_t rows = m.rows, cols = m.cols;
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && is_zero(m.at(pr, c))) ++pr;
    if (pr == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    K inv = K(1) / m.at(r, c);
    for (size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      K f = m.at(i, c);
      for (size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_of_col[c] = int(r);
    ++r;
  }
  std::vector<std::vector<K>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<K> v(cols, K(0));
    v[c] = K(1);
    for (size_t c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[c2] >= 0)
        v[c2] = -m.at(size_t(pivot_of_col[c2]), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <unsigned B>
struct Svd {
  std::vector<Real<B>> sigma;      // descending
  Matrix<Complex<B>> v;            // right singular vectors, columns
};

/// One-sided Jacobi SVD (columns orthogonalized in place).  Fine for the
/// matrix sizes here; no attempt at blocking or pivot ordering.
template <unsigned B>
Svd<B> jacobi_svd(Matrix<Complex<B>> m) {
  using C = Complex<B>;
  using R = Real<B>;
  const size_t n = m.cols;
  Matrix<C> v(n, n);
  for (size_t i = 0; i < n; ++i) v.at(i, i) = C(1);

  const R eps = ldexp(R(1), -int(B - 4));
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (size_t i = 0; i + 1 < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        R alpha(0), beta(0);
        C gamma(0);
        for (size_t r = 0; r < m.rows; ++r) {
          alpha += norm(m.at(r, i));
          beta += norm(m.at(r, j));
          gamma += conj_of(m.at(r, i)) * m.at(r, j);
        }
        R g = abs(gamma);
        if (g == 0 || g * g <= eps * eps * alpha * beta) continue;
        rotated = true;
        C phase = gamma / C(g);
        R tau = (beta - alpha) / (2 * g);
        // small-magnitude root of t^2 - 2*tau*t - 1 = 0, cancellation-free
        R t = -1 / (abs(tau) + sqrt(tau * tau + 1));
        if (tau < 0) t = -t;
        R c = 1 / sqrt(1 + t * t);
        R s = t * c;
        C sp = C(s) * conj_of(phase);
        C sq = C(s) * phase;
        for (size_t r = 0; r < m.rows; ++r) {
          C ai = m.at(r, i), aj = m.at(r, j);
          m.at(r, i) = C(c) * ai + sp * aj;
          m.at(r, j) = -sq * ai + C(c) * aj;
        }
        for (size_t r = 0; r < n; ++r) {
          C vi = v.at(r, i), vj = v.at(r, j);
          v.at(r, i) = C(c) * vi + sp * vj;
          v.at(r, j) = -sq * vi + C(c) * vj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<R> sig(n);
  for (size_t j = 0; j < n; ++j) {
    R s(0);
    for (size_t r = 0; r < m.rows; ++r) s += norm(m.at(r, j));
    sig[j] = sqrt(s);
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return sig[a] > sig[b]; });
  Svd<B> out;
  out.sigma.resize(n);
  out.v = Matrix<C>(n, n);
  for (size_t j = 0; j < n; ++j) {
    out.sigma[j] = sig[order[j]];
    for (size_t r = 0; r < n; ++r) out.v.at(r, j) = v.at(r, order[j]);
  }
  return out;
}

struct RankGapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Kernel of dimension exactly `dim`, certified by a singular-value gap of
/// at least `gap_ratio` between kept and discarded values.
template <unsigned B>
std::vector<std::vector<Complex<B>>> kernel_numeric(
    const Matrix<Complex<B>>& m, size_t dim, double gap_ratio = 1e6) {
  using R = Real<B>;
  const size_t n = m.cols;
  if (dim > n) throw std::domain_error("kernel_numeric: dim > cols");
  Svd<B> s = jacobi_svd(m);
  if (dim < n) {
    R kept = s.sigma[n - dim - 1];
    R dropped = s.sigma[n - dim];
    if (!(kept > R(gap_ratio) * dropped))
      throw RankGapError("kernel_numeric: no singular-value gap at requested dimension");
  }
  std::vector<std::vector<Complex<B>>> basis;
  for (size_t j = n - dim; j < n; ++j) {
    std::vector<Complex<B>> v(n);
    for (size_t r = 0; r < n; ++r) v[r] = s.v.at(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wronsky
