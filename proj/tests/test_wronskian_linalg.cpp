#include "wronsky/linalg.hpp"
#include "wronsky/wronskian.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace wronsky;

namespace {

GaussRat half() { return GaussRat(Rational(1, 2)); }
GaussRat quarter() { return GaussRat(Rational(1, 4)); }

}  // namespace

TEST_CASE("wronskian worked values") {
  ExactPoly one = ExactPoly::one();
  ExactPoly x = ExactPoly::x();
  CHECK(wronskian(std::vector<ExactPoly>{one, x}) == one);

  ExactPoly x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  CHECK(wronskian(std::vector<ExactPoly>{x2, x3}) == x4);

  // {x - 1/2, x^2 - x/2 + 1/4} -> x^2 - x
  ExactPoly u1({-half(), GaussRat(1)});
  ExactPoly u2({quarter(), -half(), GaussRat(1)});
  CHECK(wronskian(std::vector<ExactPoly>{u1, u2}) ==
        ExactPoly({GaussRat(0), GaussRat(-1), GaussRat(1)}));
  CHECK_THROWS_AS(wronskian(std::vector<ExactPoly>{}), std::domain_error);
}

TEST_CASE("wronskian degree law and basis invariance") {
  testutil::Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    // random strictly increasing degrees
    int k = int(rng.range(2, 4));
    std::vector<int> degs;
    int cur = int(rng.range(0, 2));
    for (int i = 0; i < k; ++i) {
      degs.push_back(cur);
      cur += int(rng.range(1, 3));
    }
    std::vector<ExactPoly> basis;
    for (int deg : degs) {
      std::vector<GaussRat> c;
      for (int i = 0; i < deg; ++i) c.push_back(rng.gauss(6, 3));
      c.push_back(GaussRat(1));
      basis.push_back(ExactPoly::from_coeffs(c));
    }
    ExactPoly w = wronskian(basis);
    long expect = 0;
    for (int deg : degs) expect += deg;
    expect -= long(k) * (k - 1) / 2;
    REQUIRE(!w.is_zero());
    CHECK(w.degree() == expect);

    // random invertible change of basis: monic wronskian unchanged, raw
    // wronskian scales by the determinant
    std::vector<ExactPoly> nb(basis.size());
    // upper triangular with random units on the diagonal keeps it simple
    GaussRat det(1);
    for (size_t i = 0; i < basis.size(); ++i) {
      GaussRat diag = GaussRat(rng.range(1, 5));
      det *= diag;
      nb[i] = basis[i] * diag;
      for (size_t j = 0; j < i; ++j) nb[i] += basis[j] * rng.gauss(4, 2);
    }
    CHECK(monic_wronskian(nb) == monic_wronskian(basis));
    CHECK(wronskian(nb) == wronskian(basis) * det);
  }
}

TEST_CASE("exact kernel via RREF") {
  // rows: relations; kernel of [[1,2,3],[0,1,1]] is span{(1,1,-1)} scaled
  Matrix<GaussRat> m(2, 3);
  m.at(0, 0) = GaussRat(1);
  m.at(0, 1) = GaussRat(2);
  m.at(0, 2) = GaussRat(3);
  m.at(1, 1) = GaussRat(1);
  m.at(1, 2) = GaussRat(1);
  auto basis = kernel_exact(m);
  REQUIRE(basis.size() == 1);
  const auto& v = basis[0];
  // check m v = 0
  CHECK((v[0] * GaussRat(1) + v[1] * GaussRat(2) + v[2] * GaussRat(3)).is_zero());
  CHECK((v[1] + v[2]).is_zero());
}

TEST_CASE("jacobi svd kernel with gap certificate") {
  using C = Complex128;
  using R = Real128;
  testutil::Rng rng(5);
  // A = G * Rk with Rk (n-k) x n of full rank: kernel dimension k
  const size_t n = 6, rank = 4, rows = 8;
  Matrix<C> rk(rank, n), g(rows, rank), a(rows, n);
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < n; ++j) rk.at(i, j) = rng.complex<128>();
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < rank; ++j) g.at(i, j) = rng.complex<128>();
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < n; ++j) {
      C s(0);
      for (size_t t = 0; t < rank; ++t) s += g.at(i, t) * rk.at(t, j);
      a.at(i, j) = s;
    }
  auto kernel = kernel_numeric(a, n - rank);
  REQUIRE(kernel.size() == n - rank);
  for (const auto& v : kernel) {
    for (size_t i = 0; i < rows; ++i) {
      C s(0);
      for (size_t j = 0; j < n; ++j) s += a.at(i, j) * v[j];
      CHECK(abs(s) < R(1e-30));
    }
  }
  // asking for the wrong dimension must fail loudly, not silently
  CHECK_THROWS_AS(kernel_numeric(a, n - rank + 1), RankGapError);
}
