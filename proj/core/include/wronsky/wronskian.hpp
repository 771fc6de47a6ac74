#pragma once

// Wronski determinants of polynomial families.  The sizes here are tiny
// (p <= 5 in practice), so determinants are expanded by Laplace recursion
// over the polynomial ring; no fraction-free machinery is needed.

#include "wronsky/poly.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace wronsky {

/// Determinant of a square matrix of polynomials, Laplace expansion along
/// the first column.
template <class K>
Poly<K> poly_det(const std::vector<std::vector<Poly<K>>>& m) {
  const size_t n = m.size();
  if (n == 0) return Poly<K>::one();
  if (n == 1) return m[0][0];
  Poly<K> acc;
  for (size_t r = 0; r < n; ++r) {
    if (m[r][0].is_zero()) continue;
    std::vector<std::vector<Poly<K>>> minor;
    minor.reserve(n - 1);
    for (size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    Poly<K> term = m[r][0] * poly_det(minor);
    if (r % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

/// Wronskian det( d^r/dx^r basis[c] ), r,c = 0..k-1.  Mixing coefficient
/// domains is a compile error (the strongest form of the domain check).
template <class K>
Poly<K> wronskian(std::span<const Poly<K>> basis) {
  if (basis.empty())
    throw std::domain_error("wronskian: empty basis");
  const size_t k = basis.size();
  std::vector<std::vector<Poly<K>>> m(k, std::vector<Poly<K>>(k));
  for (size_t c = 0; c < k; ++c) {
    m[0][c] = basis[c];
    for (size_t r = 1; r < k; ++r) m[r][c] = m[r - 1][c].derivative();
  }
  return poly_det(m);
}

template <class K>
Poly<K> wronskian(const std::vector<Poly<K>>& basis) {
  return wronskian(std::span<const Poly<K>>(basis));
}

/// Wronskian divided by its leading coefficient; invariant under change of
/// basis of the spanned plane.
template <class K>
Poly<K> monic_wronskian(std::span<const Poly<K>> basis) {
  Poly<K> w = wronskian(basis);
  if (w.is_zero())
    throw std::domain_error("monic_wronskian: dependent basis");
  return w.monic();
}

template <class K>
Poly<K> monic_wronskian(const std::vector<Poly<K>>& basis) {
  return monic_wronskian(std::span<const Poly<K>>(basis));
}

}  // namespace wronsky
