#pragma once

// Multistart solver for the Bethe system.  Damped Newton on the rational
// form of the equations with the analytic Jacobian; starts sampled from a
// disk around the centroid of the marked points; orbits deduplicated by
// canonical order and group-wise matching at the separation tolerance; the
// search stops early once the orbit count reaches the Littlewood-Richardson
// bound.  Every accepted orbit is re-certified by an independent residual
// evaluation at doubled precision.

#include "wronsky/master.hpp"
#include "wronsky/rng.hpp"

#include <boost/math/constants/constants.hpp>

#include <optional>
#include <vector>

namespace wronsky {

struct SolveBudget {
  int starts = 256;
  int max_iter = 80;
  unsigned precision_bits = 128;      // first rung of the ladder
  unsigned max_precision_bits = 1024;
};

template <class C>
struct CriticalOrbit {
  BethePoint<C> rep;                // canonical order
  real_type_t<C> residual_norm{};   // certified at doubled precision
  C log_value{};
};

template <class C>
struct SolveOutcome {
  std::vector<CriticalOrbit<C>> orbits;
  long lr_bound = 0;
  bool complete = false;   // orbit count reached the bound
  bool marginal = false;   // two orbits closer than 10*sep_tol: escalate
  int starts_used = 0;
};

namespace detail {

// residual norm at the next rung up (the 1024-bit top certifies itself)
template <unsigned B>
Real<B> certify_residual(const SchubertProblem& prob,
                         const BethePoint<Complex<B>>& t) {
  constexpr unsigned BH = (B < 1024) ? 2 * B : B;
  BethePoint<Complex<BH>> wide;
  wide.groups.resize(t.groups.size());
  for (size_t i = 0; i < t.groups.size(); ++i)
    for (const auto& v : t.groups[i])
      wide.groups[i].push_back(widen<Complex<BH>>(v));
  auto r = bethe_residuals(prob, wide);
  return Real<B>(residual_norm(r));
}

/// Solve J x = -f by Gaussian elimination with partial pivoting; empty on
/// (near-)singular J.
template <unsigned B>
std::optional<std::vector<Complex<B>>> newton_step(
    Matrix<Complex<B>> j, std::vector<Complex<B>> f) {
  using C = Complex<B>;
  using R = Real<B>;
  const size_t n = f.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    R best = abs(j.at(c, c));
    for (size_t r = c + 1; r < n; ++r) {
      R v = abs(j.at(r, c));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) return std::nullopt;
    if (piv != c) {
      for (size_t k = 0; k < n; ++k) std::swap(j.at(c, k), j.at(piv, k));
      std::swap(f[c], f[piv]);
    }
    for (size_t r = c + 1; r < n; ++r) {
      C m = j.at(r, c) / j.at(c, c);
      if (is_zero(m)) continue;
      for (size_t k = c; k < n; ++k) j.at(r, k) -= m * j.at(c, k);
      f[r] -= m * f[c];
    }
  }
  std::vector<C> x(n);
  for (size_t r = n; r-- > 0;) {
    C acc = -f[r];
    for (size_t k = r + 1; k < n; ++k) acc -= j.at(r, k) * x[k];
    x[r] = acc / j.at(r, r);
  }
  return x;
}

// Cleared-denominator form of the Bethe system: each residual multiplied
// by the product of its simple-pole factors.  P is computed term-by-term
// as products (no divisions), so it is evaluable at collisions; the
// rational form decays towards infinity and strands Newton there, the
// polynomial form does not.
template <unsigned B>
struct ClearedSystem {
  std::vector<Complex<B>> p;       // cleared residuals, flattened
  Matrix<Complex<B>> jac;          // d p / d t, flattened order
  bool jac_valid = true;           // false at exact collisions
};

template <unsigned B>
ClearedSystem<B> cleared_system(const SchubertProblem& prob,
                                const BethePoint<Complex<B>>& t) {
  using C = Complex<B>;
  const int p = prob.p();
  const auto z = prob.z().template as<C>();
  std::vector<size_t> offset(t.groups.size() + 1, 0);
  for (size_t i = 0; i < t.groups.size(); ++i)
    offset[i + 1] = offset[i] + t.groups[i].size();
  const size_t dim = offset.back();

  ClearedSystem<B> out;
  out.p.assign(dim, C(0));
  out.jac = Matrix<C>(dim, dim);

  // terms of one residual: coefficient / (x - pole), with the pole either
  // another variable (tracked by flat index) or a marked point (-1)
  struct Term {
    C coef;
    C pole;
    long var = -1;  // flat index of the pole variable, -1 for marked points
  };

  for (int i = 1; i <= p - 1; ++i) {
    const auto& g = t.groups[size_t(i - 1)];
    for (size_t l = 0; l < g.size(); ++l) {
      const size_t row = offset[size_t(i - 1)] + l;
      const C x = g[l];
      std::vector<Term> terms;
      for (size_t s = 0; s < g.size(); ++s) {
        if (s == l) continue;
        terms.push_back({C(2), g[s], long(offset[size_t(i - 1)] + s)});
      }
      for (int nb : {i - 1, i + 1}) {
        if (nb < 1 || nb > p - 1) continue;
        const auto& h = t.groups[size_t(nb - 1)];
        for (size_t s = 0; s < h.size(); ++s)
          terms.push_back({C(-1), h[s], long(offset[size_t(nb - 1)] + s)});
      }
      for (int j = 0; j < prob.n(); ++j) {
        const int e = prob.point_exponent(i, j);
        if (e == 0) continue;
        terms.push_back({C(e), z[size_t(j)], -1});
      }

      // P = sum_k coef_k * prod_{m != k} (x - pole_m)
      C pval(0);
      for (size_t k = 0; k < terms.size(); ++k) {
        C prod = terms[k].coef;
        for (size_t m = 0; m < terms.size(); ++m) {
          if (m == k) continue;
          prod *= (x - terms[m].pole);
        }
        pval += prod;
      }
      out.p[row] = pval;

      // Jacobian via P = F * D when no factor vanishes; otherwise mark it
      // unusable for this iterate.
      C dprod(1);
      bool ok = true;
      for (const Term& tm : terms) {
        C f = x - tm.pole;
        if (is_zero(f)) {
          ok = false;
          break;
        }
        dprod *= f;
      }
      if (!ok) {
        out.jac_valid = false;
        continue;
      }
      C fval = pval / dprod;
      C logd(0);
      for (const Term& tm : terms) logd += C(1) / (x - tm.pole);
      // dF entries reconstructed from the same pole structure
      for (size_t k = 0; k < terms.size(); ++k) {
        const Term& tm = terms[k];
        C inv = C(1) / (x - tm.pole);
        C df = tm.coef * inv * inv;  // dF/d(pole var); dF/dx gets -sum
        if (tm.var >= 0)
          out.jac.at(row, size_t(tm.var)) =
              df * dprod + fval * (-dprod * inv);
      }
      C dfdx(0);
      for (const Term& tm : terms) {
        C inv = C(1) / (x - tm.pole);
        dfdx -= tm.coef * inv * inv;
      }
      out.jac.at(row, row) = dfdx * dprod + fval * dprod * logd;
    }
  }
  return out;
}

/// Group-wise matching distance: max over groups of the min-over-pairings
/// max coordinate distance.  Group sizes are tiny, so exact matching is a
/// permutation scan.
template <unsigned B>
Real<B> orbit_distance(const BethePoint<Complex<B>>& a,
                       const BethePoint<Complex<B>>& b) {
  using R = Real<B>;
  R worst(0);
  for (size_t gi = 0; gi < a.groups.size(); ++gi) {
    const auto& ga = a.groups[gi];
    const auto& gb = b.groups[gi];
    const size_t n = ga.size();
    if (n == 0) continue;
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    R best(-1);
    do {
      R cur(0);
      for (size_t i = 0; i < n; ++i)
        cur = std::max(cur, abs(ga[i] - gb[perm[i]]));
      if (best < 0 || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace detail

/// One run of the multistart search at a fixed precision rung.
template <unsigned B>
SolveOutcome<Complex<B>> solve_at(const SchubertProblem& prob,
                                  const SolveBudget& budget,
                                  std::uint64_t seed) {
  using C = Complex<B>;
  using R = Real<B>;
  SolveOutcome<C> out;
  out.lr_bound = prob.lr_bound();

  const R sep_tol = default_sep_tol<B>();
  const R cert_tol = pow(R(10), -int(B / 4));
  const int nvars = prob.num_variables();

  if (nvars == 0) {
    // no variables: the empty point is the single critical point, with
    // master value 1, provided the intersection is nonempty at all
    if (out.lr_bound >= 1) {
      CriticalOrbit<C> orbit;
      orbit.rep.groups.assign(size_t(prob.p() - 1), {});
      orbit.residual_norm = R(0);
      orbit.log_value = C(0);
      out.orbits.push_back(std::move(orbit));
    }
    out.complete = long(out.orbits.size()) == out.lr_bound;
    return out;
  }
  if (out.lr_bound == 0) {
    out.complete = true;
    return out;
  }

  // start disk per the centroid heuristic
  const auto z = prob.z().template as<C>();
  C centroid(0);
  R zmax(0);
  for (const C& zj : z) {
    centroid += zj;
    zmax = std::max(zmax, abs(zj));
  }
  centroid /= C(int(z.size()));
  const R radius = 2 * (1 + zmax);
  const R pi = boost::math::constants::pi<R>();

  SplitMix64 rng(seed);
  auto sample = [&]() {
    BethePoint<C> t;
    t.groups.resize(size_t(prob.p() - 1));
    for (int i = 0; i < prob.p() - 1; ++i) {
      for (int l = 0; l < prob.k()[size_t(i)]; ++l) {
        R r = radius * sqrt(R(rng.unit()));
        R theta = 2 * pi * R(rng.unit());
        t.groups[size_t(i)].push_back(centroid +
                                      C(r * cos(theta), r * sin(theta)));
      }
    }
    return t;
  };

  // Newton on the rational system; quadratic near admissible roots but the
  // residual also decays towards infinity, so escapes are aborted early.
  auto rational_newton = [&](BethePoint<C> t) -> std::optional<BethePoint<C>> {
    for (int iter = 0; iter < budget.max_iter; ++iter) {
      std::vector<std::vector<C>> res;
      try {
        res = bethe_residuals(prob, t);
      } catch (const EvalError&) {
        return std::nullopt;
      }
      R fnorm = residual_norm(res);
      if (fnorm <= cert_tol) return t;
      std::vector<C> f;
      for (const auto& g : res) f.insert(f.end(), g.begin(), g.end());
      auto step = detail::newton_step(bethe_jacobian(prob, t), f);
      if (!step) return std::nullopt;
      R smax(0);
      for (const C& s : *step) smax = std::max(smax, abs(s));
      if (smax > 10 * radius) return std::nullopt;

      R lambda(1);
      bool accepted = false;
      for (int half = 0; half < 8; ++half) {
        BethePoint<C> cand = t;
        size_t idx = 0;
        for (auto& g : cand.groups)
          for (auto& v : g) v += C(lambda) * (*step)[idx++];
        try {
          R cn = residual_norm(bethe_residuals(prob, cand));
          if (cn < fnorm) {
            t = cand;
            accepted = true;
            break;
          }
        } catch (const EvalError&) {
          // collision straight ahead: shorten
        }
        lambda /= 2;
      }
      if (!accepted) return std::nullopt;
    }
    return std::nullopt;
  };

  // Fallback: Newton on the cleared-denominator polynomial system, which
  // grows at infinity instead of flattening.  Convergence is still judged
  // by the rational residual.
  auto polynomial_newton = [&](BethePoint<C> t) -> std::optional<BethePoint<C>> {
    for (int iter = 0; iter < 2 * budget.max_iter; ++iter) {
      bool off_singular = true;
      try {
        if (residual_norm(bethe_residuals(prob, t)) <= cert_tol) return t;
      } catch (const EvalError&) {
        off_singular = false;
      }
      auto sys = detail::cleared_system(prob, t);
      if (!sys.jac_valid || !off_singular) return std::nullopt;
      R pnorm(0);
      for (const C& v : sys.p) pnorm = std::max(pnorm, abs(v));
      auto step = detail::newton_step(sys.jac, sys.p);
      if (!step) return std::nullopt;
      R lambda(1);
      bool accepted = false;
      for (int half = 0; half < 10; ++half) {
        BethePoint<C> cand = t;
        size_t idx = 0;
        for (auto& g : cand.groups)
          for (auto& v : g) v += C(lambda) * (*step)[idx++];
        R cn(0);
        for (const C& v : detail::cleared_system(prob, cand).p)
          cn = std::max(cn, abs(v));
        if (cn < pnorm) {
          t = cand;
          accepted = true;
          break;
        }
        lambda /= 2;
      }
      if (!accepted) return std::nullopt;
      R far(0);
      for (const auto& g : t.groups)
        for (const C& v : g) far = std::max(far, abs(v - centroid));
      if (far > 50 * radius) return std::nullopt;
    }
    return std::nullopt;
  };

  for (int start = 0; start < budget.starts; ++start) {
    out.starts_used = start + 1;
    BethePoint<C> start_point = sample();
    if (!is_admissible(prob, start_point, sep_tol).ok) continue;

    auto solved = rational_newton(start_point);
    if (!solved) solved = polynomial_newton(start_point);
    if (!solved) continue;
    BethePoint<C> t = *solved;
    if (!is_admissible(prob, t, sep_tol).ok) continue;

    t.canonicalize();
    bool duplicate = false;
    for (const auto& orbit : out.orbits) {
      R d = detail::orbit_distance(orbit.rep, t);
      if (d <= sep_tol) {
        duplicate = true;
        break;
      }
      if (d <= 10 * sep_tol) out.marginal = true;
    }
    if (duplicate) continue;

    auto value = log_master_value(prob, t);
    if (!value.finite || !value.nonzero) continue;
    R certified = detail::certify_residual(prob, t);
    if (certified > cert_tol) continue;

    CriticalOrbit<C> orbit;
    orbit.rep = std::move(t);
    orbit.residual_norm = certified;
    orbit.log_value = value.log_value;
    out.orbits.push_back(std::move(orbit));
    if (long(out.orbits.size()) == out.lr_bound) break;
  }
  // canonical listing order: lexicographic over the flattened representative
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const CriticalOrbit<C>& a, const CriticalOrbit<C>& b) {
              for (size_t g = 0; g < a.rep.groups.size(); ++g)
                for (size_t l = 0; l < a.rep.groups[g].size(); ++l) {
                  const C &x = a.rep.groups[g][l], &y = b.rep.groups[g][l];
                  if (x.real() != y.real()) return x.real() < y.real();
                  if (x.imag() != y.imag()) return x.imag() < y.imag();
                }
              return false;
            });
  out.complete = long(out.orbits.size()) == out.lr_bound;
  return out;
}

}  // namespace wronsky
