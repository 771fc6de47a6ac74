#include "wronsky/problem.hpp"

#include <numeric>
#include <sstream>

namespace wronsky {

using schubert::Box;
using schubert::SchubertIndex;

SchubertProblem SchubertProblem::build(int p, int d, MarkedPoints z,
                                       std::vector<SchubertIndex> w) {
  if (p < 2) throw ProblemError(ProblemError::Kind::kBadIndex, "order p must be >= 2");
  const Box box{p, d};
  const int n = int(z.size());
  if (int(w.size()) != n + 1)
    throw ProblemError(ProblemError::Kind::kBadIndex,
                       "need one index per marked point plus one at infinity");
  for (const SchubertIndex& wi : w)
    if (wi.box != box)
      throw ProblemError(ProblemError::Kind::kBadIndex,
                         "index does not live in G_p(Poly_d)");
  for (int j = 0; j < n; ++j)
    if (w[size_t(j)].w.back() != 0)
      throw ProblemError(ProblemError::Kind::kBasePoint,
                         "w_p must vanish at finite points (no base point)");
  if (w.back().w.back() != 0)
    throw ProblemError(ProblemError::Kind::kInfinityBasePoint,
                       "w_p at infinity must vanish (generic solution has degree d)");

  long codim = 0;
  for (const SchubertIndex& wi : w) codim += wi.codim();
  if (codim != box.dimension()) {
    std::ostringstream os;
    os << "codimension mismatch: indices sum to " << codim
       << ", dim G_p(Poly_d) = " << box.dimension();
    throw ProblemError(ProblemError::Kind::kCodimMismatch, os.str());
  }

  SchubertProblem prob;
  prob.p_ = p;
  prob.d_ = d;
  prob.n_ = n;
  prob.z_ = std::move(z);
  prob.w_ = std::move(w);

  prob.m_.resize(size_t(n));
  for (int j = 0; j < n; ++j) prob.m_[size_t(j)] = prob.w_[size_t(j)].codim();

  // m_j(i) = sum_{l=p+1-i}^{p} w_l(j);  m_j(0) = 0, m_j(p) = m_j.
  prob.mgrid_.assign(size_t(n), std::vector<int>(size_t(p) + 1, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 1; i <= p; ++i) {
      int s = 0;
      for (int l = p + 1 - i; l <= p; ++l) s += prob.w_[size_t(j)].w[size_t(l - 1)];
      prob.mgrid_[size_t(j)][size_t(i)] = s;
    }

  // rho_l(z_j) = w_l(j) + p - l.
  prob.rho_.assign(size_t(n), std::vector<int>(size_t(p), 0));
  for (int j = 0; j < n; ++j)
    for (int l = 1; l <= p; ++l)
      prob.rho_[size_t(j)][size_t(l - 1)] = prob.w_[size_t(j)].w[size_t(l - 1)] + p - l;

  // Solution degrees from the index at infinity: d_l = d - w_l(oo) + l - p.
  prob.degs_.resize(size_t(p));
  const SchubertIndex& winf = prob.w_.back();
  for (int l = 1; l <= p; ++l)
    prob.degs_[size_t(l - 1)] = d - winf.w[size_t(l - 1)] + l - p;
  for (int l = 0; l < p; ++l) {
    if (prob.degs_[size_t(l)] < 0 ||
        (l > 0 && prob.degs_[size_t(l)] <= prob.degs_[size_t(l - 1)]))
      throw ProblemError(ProblemError::Kind::kBadIndex,
                         "degrees at infinity not strictly increasing");
  }

  // Level counts: k_i = deg W_{p-i} - sum_j m_j(p-i), with
  // deg W_i = sum_{l<=i} d_l - i(i-1)/2.  The intersection is empty when
  // any k_i is negative; such instances are rejected here.
  prob.k_.resize(size_t(p) - 1);
  prob.total_k_ = 0;
  for (int i = 1; i <= p - 1; ++i) {
    int q = p - i;
    long degw = 0;
    for (int l = 1; l <= q; ++l) degw += prob.degs_[size_t(l - 1)];
    degw -= long(q) * (q - 1) / 2;
    long mm = 0;
    for (int j = 0; j < n; ++j) mm += prob.mgrid_[size_t(j)][size_t(q)];
    long ki = degw - mm;
    if (ki < 0) {
      std::ostringstream os;
      os << "negative level count k_" << i << " = " << ki
         << ": the intersection is empty";
      throw ProblemError(ProblemError::Kind::kNegativeLevel, os.str());
    }
    prob.k_[size_t(i - 1)] = int(ki);
    prob.total_k_ += int(ki);
  }

  // Exponent inequality 2 m_j(i) - m_j(i-1) - m_j(i+1) <= 0 holds for any
  // weakly decreasing index; assert it as a structural invariant.
  for (int j = 0; j < n; ++j)
    for (int i = 1; i <= p - 1; ++i)
      if (2 * prob.mgrid_[size_t(j)][size_t(i)] -
              prob.mgrid_[size_t(j)][size_t(i - 1)] -
              prob.mgrid_[size_t(j)][size_t(i + 1)] > 0)
        throw ProblemError(ProblemError::Kind::kBadIndex,
                           "exponent convexity violated");

  // Z_i(x) = prod_j (x - z_j)^{m_j(i)}, i = 1..p-1, and the target
  // Wronskian prod_j (x - z_j)^{m_j}.
  prob.Z_.reserve(size_t(p) - 1);
  for (int i = 1; i <= p - 1; ++i) {
    ExactPoly zi = ExactPoly::one();
    for (int j = 0; j < n; ++j) {
      ExactPoly lin({-prob.z_.z[size_t(j)], GaussRat(1)});
      zi *= lin.pow(unsigned(prob.mgrid_[size_t(j)][size_t(i)]));
    }
    prob.Z_.push_back(std::move(zi));
  }
  ExactPoly wt = ExactPoly::one();
  for (int j = 0; j < n; ++j) {
    ExactPoly lin({-prob.z_.z[size_t(j)], GaussRat(1)});
    wt *= lin.pow(unsigned(prob.m_[size_t(j)]));
  }
  prob.w_target_ = std::move(wt);

  return prob;
}

SchubertProblem SchubertProblem::special(int p, const std::vector<int>& m,
                                         const std::vector<int>& k,
                                         MarkedPoints z) {
  if (int(k.size()) != p - 1)
    throw ProblemError(ProblemError::Kind::kBadIndex,
                       "need p-1 level counts");
  if (m.size() != z.size())
    throw ProblemError(ProblemError::Kind::kPoints,
                       "need one multiplicity per marked point");
  for (int ki : k)
    if (ki < 0)
      throw ProblemError(ProblemError::Kind::kNegativeLevel,
                         "negative level count");
  for (int mj : m)
    if (mj < 1)
      throw ProblemError(ProblemError::Kind::kBadIndex,
                         "multiplicities must be positive");

  // Degrees forced by the level counts in the special case:
  // d_1 = k_{p-1}, d_i = k_{p-i} - k_{p+1-i} + i - 1, with k_0 = sum m_j.
  const long k0 = std::accumulate(m.begin(), m.end(), 0L);
  std::vector<long> kk(size_t(p) + 1, 0);
  kk[0] = k0;
  for (int i = 1; i <= p - 1; ++i) kk[size_t(i)] = k[size_t(i - 1)];
  std::vector<int> degs(size_t(p), 0);
  degs[0] = int(kk[size_t(p) - 1]);
  for (int i = 2; i <= p; ++i)
    degs[size_t(i - 1)] = int(kk[size_t(p - i)] - kk[size_t(p - i + 1)] + i - 1);
  const int d = degs.back();

  const Box box{p, d};
  std::vector<SchubertIndex> w;
  for (int mj : m) {
    std::vector<int> wi(size_t(p), 0);
    wi[0] = mj;
    if (mj > box.width())
      throw ProblemError(ProblemError::Kind::kBadIndex,
                         "multiplicity exceeds the box");
    w.emplace_back(std::move(wi), box);
  }
  std::vector<int> winf(size_t(p), 0);
  for (int l = 1; l <= p; ++l) winf[size_t(l - 1)] = d - degs[size_t(l - 1)] + l - p;
  if (!std::is_sorted(winf.rbegin(), winf.rend()) || winf[0] > box.width() ||
      winf.back() < 0)
    throw ProblemError(ProblemError::Kind::kBadIndex,
                       "level counts force an invalid index at infinity");
  w.emplace_back(std::move(winf), box);

  SchubertProblem prob = build(p, d, std::move(z), std::move(w));
  if (prob.k() != k)
    throw ProblemError(ProblemError::Kind::kBadIndex,
                       "level counts inconsistent with forced degrees");
  return prob;
}

long SchubertProblem::lr_bound() const {
  if (lr_bound_ < 0)
    lr_bound_ = schubert::intersection_number(w_).value;
  return lr_bound_;
}

}  // namespace wronsky
