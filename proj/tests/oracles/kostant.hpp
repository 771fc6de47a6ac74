#pragma once

// Independent character-theoretic oracle for tensor multiplicities: the
// multiplicity of the highest weight nu in Gamma_{lambda(1)} x ... x
// Gamma_{lambda(n)} is the alternating sum over the Weyl group S_p of the
// weight multiplicities at sigma(nu+rho)-rho, and weight multiplicities of
// the tensor product are convolutions of per-factor Kostka counts (straight
// SSYT enumeration).  Independent of both the LR skew-tableau code and the
// intersection-number route.

#include "oracles/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

/// Weight multiplicities of the tensor product, as content-vector counts.
inline std::map<Mono, long> tensor_weight_multiplicities(
    const std::vector<Partition>& lambdas, int p) {
  std::map<Mono, long> acc;
  acc[Mono(size_t(p), 0)] = 1;
  for (const Partition& lambda : lambdas) {
    std::vector<Mono> contents;
    ssyt_contents(lambda, p, contents);
    std::map<Mono, long> next;
    for (const auto& [m, c] : acc)
      for (const Mono& add : contents) {
        Mono sum(m.size());
        for (size_t i = 0; i < m.size(); ++i) sum[i] = m[i] + add[i];
        next[sum] += c;
      }
    acc = std::move(next);
  }
  return acc;
}

/// Multiplicity of the irreducible with gl_p diagram nu in the product.
inline long tensor_multiplicity(const std::vector<Partition>& lambdas,
                                const Partition& nu, int p) {
  auto weights = tensor_weight_multiplicities(lambdas, p);
  std::vector<int> rho(size_t(p), 0);
  for (int i = 0; i < p; ++i) rho[size_t(i)] = p - 1 - i;

  std::vector<int> perm(size_t(p), 0);
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    // sign of the permutation
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    Mono target(size_t(p), 0);
    bool ok = true;
    for (int i = 0; i < p; ++i) {
      int v = nu[size_t(perm[size_t(i)])] + rho[size_t(perm[size_t(i)])] -
              rho[size_t(i)];
      if (v < 0) {
        ok = false;
        break;
      }
      target[size_t(i)] = v;
    }
    if (!ok) continue;
    auto it = weights.find(target);
    if (it == weights.end()) continue;
    total += (inv % 2 == 0 ? it->second : -it->second);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracle
