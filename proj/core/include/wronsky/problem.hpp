#pragma once

// A fully-validated Schubert intersection instance: marked points, indices
// at the marked points and at infinity, and every derived quantity the
// solver and the reconstruction need (level counts, marked-root
// polynomials, exponents, degrees, target Wronskian).

#include "wronsky/marked.hpp"
#include "wronsky/poly.hpp"
#include "wronsky/schubert.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wronsky {

struct ProblemError : std::domain_error {
  enum class Kind {
    kBadIndex,          // index invalid in the box
    kBasePoint,         // w_p(j) != 0 at a finite point
    kInfinityBasePoint, // w_p(n+1) != 0, so no degree-d solution
    kCodimMismatch,     // codimensions do not sum to dim G_p
    kNegativeLevel,     // some k_i < 0: the intersection is empty
    kPoints,            // marked points invalid
  };
  Kind kind;
  ProblemError(Kind k, const std::string& what)
      : std::domain_error(what), kind(k) {}
};

class SchubertProblem {
 public:
  /// Validates every structural invariant; throws ProblemError naming the
  /// violated constraint otherwise.
  static SchubertProblem build(int p, int d, MarkedPoints z,
                               std::vector<schubert::SchubertIndex> w);

  /// Special instance (all finite indices (m_j,0,...,0)).  The degree bound
  /// d and the index at infinity are forced by the level counts.
  static SchubertProblem special(int p, const std::vector<int>& m,
                                 const std::vector<int>& k, MarkedPoints z);

  int p() const { return p_; }
  int d() const { return d_; }
  int n() const { return n_; }
  schubert::Box box() const { return {p_, d_}; }
  const MarkedPoints& z() const { return z_; }
  const std::vector<schubert::SchubertIndex>& indices() const { return w_; }
  const schubert::SchubertIndex& index_at_infinity() const { return w_.back(); }

  /// m_j = |w(j)|, j = 0..n-1.
  const std::vector<int>& m() const { return m_; }
  /// m_j(i) for i = 0..p (first index j = 0..n-1).
  int mgrid(int j, int i) const { return mgrid_[size_t(j)][size_t(i)]; }
  /// Level counts k_1..k_{p-1} (0-based storage).
  const std::vector<int>& k() const { return k_; }
  int num_variables() const { return total_k_; }
  /// Z_i for i = 1..p-1 (0-based storage); monic with roots among z.
  const std::vector<ExactPoly>& marked_factors() const { return Z_; }
  /// Exponent rho_l(z_j), l = 1..p (0-based l).
  int rho(int j, int l) const { return rho_[size_t(j)][size_t(l)]; }
  /// Solution degrees d_1 < ... < d_p, from the index at infinity.
  const std::vector<int>& degrees() const { return degs_; }
  const ExactPoly& target_wronskian() const { return w_target_; }

  /// Exponent of (t - z_j) in the master-function factor for group i
  /// (1-based i): 2 m_j(p-i) - m_j(p-i-1) - m_j(p-i+1); always <= 0.
  int point_exponent(int i, int j) const {
    return 2 * mgrid(j, p_ - i) - mgrid(j, p_ - i - 1) - mgrid(j, p_ - i + 1);
  }

  /// Upper bound on the number of critical orbits: the intersection number
  /// of the problem's classes.
  long lr_bound() const;

 private:
  SchubertProblem() = default;

  int p_ = 0, d_ = 0, n_ = 0, total_k_ = 0;
  MarkedPoints z_;
  std::vector<schubert::SchubertIndex> w_;
  std::vector<int> m_;
  std::vector<std::vector<int>> mgrid_;
  std::vector<int> k_;
  std::vector<ExactPoly> Z_;
  std::vector<std::vector<int>> rho_;
  std::vector<int> degs_;
  ExactPoly w_target_;
  mutable long lr_bound_ = -1;
};

}  // namespace wronsky
