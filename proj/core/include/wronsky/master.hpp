#pragma once

// The master function of a Schubert problem and its critical-point system.
//
// Variables come in p-1 groups, group i holding k_i values (the unknown
// roots of T_i).  The logarithm of the master function is the sum of
//   +2 log(t_l^i - t_s^i)            intra-group pairs,
//   -1 log(t_l^i - t_s^{i+1})        adjacent-group pairs,
//   e_ij log(t_l^i - z_j)            marked-point factors,
// with e_ij = 2 m_j(p-i) - m_j(p-i-1) - m_j(p-i+1) <= 0.  The Bethe system
// is the vanishing gradient of this sum.

#include "wronsky/problem.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wronsky/linalg.hpp"

namespace wronsky {

template <class C>
struct BethePoint {
  std::vector<std::vector<C>> groups;

  int total() const {
    int t = 0;
    for (const auto& g : groups) t += int(g.size());
    return t;
  }

  /// Canonical order: each group sorted by (re, im) lexicographically.
  void canonicalize() {
    for (auto& g : groups)
      std::sort(g.begin(), g.end(), [](const C& a, const C& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
      });
  }
};

template <class C>
BethePoint<C> make_bethe_point(const SchubertProblem& prob,
                               std::vector<std::vector<C>> groups) {
  if (int(groups.size()) != prob.p() - 1)
    throw std::domain_error("BethePoint: wrong number of groups");
  for (int i = 0; i < prob.p() - 1; ++i)
    if (int(groups[size_t(i)].size()) != prob.k()[size_t(i)])
      throw std::domain_error("BethePoint: group size mismatch");
  return BethePoint<C>{std::move(groups)};
}

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class C>
struct MasterValue {
  C log_value{};     // sum of branch logs; exp of it is the value
  bool finite = true;    // no pole factor hit
  bool nonzero = true;   // no vanishing factor hit
};

/// log of the master function with degeneracy flags.  Exact collisions set
/// the flags instead of throwing.
template <unsigned B>
MasterValue<Complex<B>> log_master_value(const SchubertProblem& prob,
                                         const BethePoint<Complex<B>>& t) {
  using C = Complex<B>;
  if (int(t.groups.size()) != prob.p() - 1)
    throw std::domain_error("log_master_value: wrong group count");
  const auto z = prob.z().template as<C>();
  MasterValue<C> out;
  for (int i = 1; i <= prob.p() - 1; ++i) {
    const auto& g = t.groups[size_t(i - 1)];
    if (int(g.size()) != prob.k()[size_t(i - 1)])
      throw std::domain_error("log_master_value: group size mismatch");
    for (size_t l = 0; l < g.size(); ++l)
      for (size_t s = l + 1; s < g.size(); ++s) {
        C d = g[l] - g[s];
        if (is_zero(d)) {
          out.nonzero = false;
          continue;
        }
        // log of the squared factor keeps the sum invariant under swaps
        out.log_value += log(d * d);
      }
    if (i <= prob.p() - 2) {
      const auto& h = t.groups[size_t(i)];
      for (const C& a : g)
        for (const C& b : h) {
          C d = a - b;
          if (is_zero(d)) {
            out.finite = false;
            continue;
          }
          out.log_value -= log(d);
        }
    }
    for (int j = 0; j < prob.n(); ++j) {
      const int e = prob.point_exponent(i, j);
      if (e == 0) continue;
      for (const C& a : g) {
        C d = a - z[size_t(j)];
        if (is_zero(d)) {
          out.finite = false;  // e < 0 always
          continue;
        }
        out.log_value += e * log(d);
      }
    }
  }
  return out;
}

/// Gradient of the log master function, grouped like the point itself.
/// Exact collisions are evaluation errors naming the offending pair.
template <class C>
std::vector<std::vector<C>> bethe_residuals(const SchubertProblem& prob,
                                            const BethePoint<C>& t) {
  const int p = prob.p();
  if (int(t.groups.size()) != p - 1)
    throw std::domain_error("bethe_residuals: wrong group count");
  const auto z = prob.z().template as<C>();

  auto fail = [](int i1, size_t l1, int i2, size_t l2) {
    std::ostringstream os;
    os << "bethe_residuals: collision between t[" << i1 << "][" << l1
       << "] and t[" << i2 << "][" << l2 << "]";
    throw EvalError(os.str());
  };

  std::vector<std::vector<C>> out(t.groups.size());
  for (int i = 1; i <= p - 1; ++i) {
    const auto& g = t.groups[size_t(i - 1)];
    out[size_t(i - 1)].assign(g.size(), C(0));
    for (size_t l = 0; l < g.size(); ++l) {
      C acc(0);
      for (size_t s = 0; s < g.size(); ++s) {
        if (s == l) continue;
        C d = g[l] - g[s];
        if (is_zero(d)) fail(i, l, i, s);
        acc += C(2) / d;
      }
      for (int nb : {i - 1, i + 1}) {
        if (nb < 1 || nb > p - 1) continue;
        for (size_t s = 0; s < t.groups[size_t(nb - 1)].size(); ++s) {
          C d = g[l] - t.groups[size_t(nb - 1)][s];
          if (is_zero(d)) fail(i, l, nb, s);
          acc -= C(1) / d;
        }
      }
      for (int j = 0; j < prob.n(); ++j) {
        const int e = prob.point_exponent(i, j);
        if (e == 0) continue;
        C d = g[l] - z[size_t(j)];
        if (is_zero(d)) fail(i, l, -1, size_t(j));
        acc += C(e) / d;
      }
      out[size_t(i - 1)][l] = acc;
    }
  }
  return out;
}

template <class C>
real_type_t<C> residual_norm(const std::vector<std::vector<C>>& r) {
  real_type_t<C> m(0);
  for (const auto& g : r)
    for (const C& v : g) m = std::max(m, magnitude(v));
  return m;
}

/// Hessian of the log master function (the Jacobian of the Bethe system),
/// in flattened variable order.
template <class C>
Matrix<C> bethe_jacobian(const SchubertProblem& prob, const BethePoint<C>& t) {
  const int p = prob.p();
  const auto z = prob.z().template as<C>();
  std::vector<size_t> offset(t.groups.size() + 1, 0);
  for (size_t i = 0; i < t.groups.size(); ++i)
    offset[i + 1] = offset[i] + t.groups[i].size();
  const size_t dim = offset.back();
  Matrix<C> jac(dim, dim);
  for (int i = 1; i <= p - 1; ++i) {
    const auto& g = t.groups[size_t(i - 1)];
    for (size_t l = 0; l < g.size(); ++l) {
      const size_t row = offset[size_t(i - 1)] + l;
      C diag(0);
      for (size_t s = 0; s < g.size(); ++s) {
        if (s == l) continue;
        C d = g[l] - g[s];
        C inv2 = C(1) / (d * d);
        diag -= C(2) * inv2;
        jac.at(row, offset[size_t(i - 1)] + s) = C(2) * inv2;
      }
      for (int nb : {i - 1, i + 1}) {
        if (nb < 1 || nb > p - 1) continue;
        const auto& h = t.groups[size_t(nb - 1)];
        for (size_t s = 0; s < h.size(); ++s) {
          C d = g[l] - h[s];
          C inv2 = C(1) / (d * d);
          diag += inv2;
          jac.at(row, offset[size_t(nb - 1)] + s) = -inv2;
        }
      }
      for (int j = 0; j < prob.n(); ++j) {
        const int e = prob.point_exponent(i, j);
        if (e == 0) continue;
        C d = g[l] - z[size_t(j)];
        diag -= C(e) / (d * d);
      }
      jac.at(row, row) = diag;
    }
  }
  return jac;
}

struct Admissibility {
  bool ok = true;
  std::vector<std::string> reasons;

  void reject(std::string why) {
    ok = false;
    reasons.push_back(std::move(why));
  }
};

/// Pairwise distinct within groups, no value shared by adjacent groups, no
/// value at a marked point -- each tested at the separation tolerance.
/// Exactly the conditions making the master value finite and nonzero.
template <unsigned B>
Admissibility is_admissible(const SchubertProblem& prob,
                            const BethePoint<Complex<B>>& t,
                            const Real<B>& sep_tol) {
  using C = Complex<B>;
  Admissibility out;
  const auto z = prob.z().template as<C>();
  const int p = prob.p();
  for (int i = 1; i <= p - 1; ++i) {
    const auto& g = t.groups[size_t(i - 1)];
    for (size_t l = 0; l < g.size(); ++l)
      for (size_t s = l + 1; s < g.size(); ++s)
        if (abs(g[l] - g[s]) <= sep_tol) {
          out.reject("intra-group collision in group " + std::to_string(i));
          break;
        }
    if (i <= p - 2) {
      for (const C& a : g)
        for (const C& b : t.groups[size_t(i)])
          if (abs(a - b) <= sep_tol) {
            out.reject("adjacent-group collision between groups " +
                       std::to_string(i) + " and " + std::to_string(i + 1));
            goto next_group;
          }
    }
  next_group:
    for (const C& a : g)
      for (size_t j = 0; j < z.size(); ++j)
        if (abs(a - z[j]) <= sep_tol) {
          out.reject("marked-point collision at z_" + std::to_string(j + 1));
          goto done_group;
        }
  done_group:;
  }
  return out;
}

/// Default separation tolerance at a given precision: 2^(-bits/3).
template <unsigned B>
Real<B> default_sep_tol() {
  return ldexp(Real<B>(1), -int(B / 3));
}

}  // namespace wronsky
