#include "wronsky/problem.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace wronsky;
using schubert::Box;
using schubert::SchubertIndex;

namespace {

MarkedPoints pts(std::initializer_list<long> xs) {
  std::vector<GaussRat> z;
  for (long x : xs) z.emplace_back(Rational(x));
  return MarkedPoints(z);
}

}  // namespace

TEST_CASE("worked p=2 instance") {
  Box b{2, 2};
  auto prob = SchubertProblem::build(
      2, 2, pts({0, 1}),
      {SchubertIndex({1, 0}, b), SchubertIndex({1, 0}, b),
       SchubertIndex({0, 0}, b)});
  CHECK(prob.m() == std::vector<int>{1, 1});
  CHECK(prob.k() == std::vector<int>{1});
  CHECK(prob.degrees() == std::vector<int>{1, 2});
  CHECK(prob.lr_bound() == 1);
  // target wronskian x(x-1)
  CHECK(prob.target_wronskian() ==
        ExactPoly({GaussRat(0), GaussRat(-1), GaussRat(1)}));
  // special indices: Z_1 = 1
  CHECK(prob.marked_factors()[0] == ExactPoly::one());
  // point exponents are -m_j
  CHECK(prob.point_exponent(1, 0) == -1);
  CHECK(prob.point_exponent(1, 1) == -1);
}

TEST_CASE("mgrid values") {
  // p=3, w(j) = (2,1,0): m_j(1) = 0, m_j(2) = 1
  Box b{3, 4};
  auto prob = SchubertProblem::build(
      3, 4, pts({0, 1}),
      {SchubertIndex({2, 1, 0}, b), SchubertIndex({2, 1, 0}, b),
       SchubertIndex({0, 0, 0}, b)});
  CHECK(prob.mgrid(0, 0) == 0);
  CHECK(prob.mgrid(0, 1) == 0);
  CHECK(prob.mgrid(0, 2) == 1);
  CHECK(prob.mgrid(0, 3) == 3);
  // Z_1 = 1, Z_2 = (x-z_1)(x-z_2)
  CHECK(prob.marked_factors()[0] == ExactPoly::one());
  CHECK(prob.marked_factors()[1] ==
        ExactPoly({GaussRat(0), GaussRat(-1), GaussRat(1)}));
}

TEST_CASE("structured rejections") {
  Box b{2, 2};
  // codimension mismatch
  CHECK_THROWS_AS(SchubertProblem::build(2, 2, pts({0, 1}),
                                         {SchubertIndex({1, 0}, b),
                                          SchubertIndex({0, 0}, b),
                                          SchubertIndex({0, 0}, b)}),
                  ProblemError);
  // base point at a finite marked point
  CHECK_THROWS_AS(SchubertProblem::build(2, 2, pts({0, 1}),
                                         {SchubertIndex({1, 1}, b),
                                          SchubertIndex({0, 0}, b),
                                          SchubertIndex({0, 0}, b)}),
                  ProblemError);
  // coincident points
  CHECK_THROWS_AS(pts({0, 0}), std::domain_error);
  // negative level count: p=2, d=3, single point m=3 with w(inf)=(1,0):
  // k_1 = d_1 = 3 - 1 = ... the degrees force k_1 = deg W_1 - 0 = d_1;
  // pick indices so that the count goes negative
  Box b3{2, 3};
  try {
    auto prob = SchubertProblem::build(2, 3, pts({0}),
                                       {SchubertIndex({2, 0}, b3),
                                        SchubertIndex({2, 0}, b3)});
    for (int ki : prob.k()) CHECK(ki >= 0);
  } catch (const ProblemError& e) {
    CHECK((e.kind == ProblemError::Kind::kNegativeLevel ||
           e.kind == ProblemError::Kind::kBadIndex));
  }
}

TEST_CASE("special-form completion forces the degree data") {
  // p=3, m=(1,1,1), k=(1,0): degrees (0,2,4), d=4, w(inf) = (2,1,0)
  auto prob = SchubertProblem::special(3, {1, 1, 1}, {1, 0}, pts({0, 1, 2}));
  CHECK(prob.d() == 4);
  CHECK(prob.degrees() == std::vector<int>{0, 2, 4});
  CHECK(prob.index_at_infinity().w == std::vector<int>{2, 1, 0});
  CHECK(prob.k() == std::vector<int>{1, 0});
  CHECK(prob.lr_bound() == 2);

  // hypergeometric family instance: p=3, m=(2,2), k=(2,0)
  auto pc = SchubertProblem::special(3, {2, 2}, {2, 0}, pts({0, 1}));
  CHECK(pc.d() == 4);
  CHECK(pc.degrees() == std::vector<int>{0, 3, 4});
  CHECK(pc.index_at_infinity().w == std::vector<int>{2, 0, 0});
  CHECK(pc.lr_bound() == 1);

  // four spin-1/2 points
  auto sp = SchubertProblem::special(2, {1, 1, 1, 1}, {2},
                                     pts({0, 1, 2, 3}));
  CHECK(sp.d() == 3);
  CHECK(sp.lr_bound() == 2);

  // invalid level counts force a rejection
  CHECK_THROWS_AS(SchubertProblem::special(3, {1, 1}, {3, 0}, pts({0, 1})),
                  ProblemError);
}

TEST_CASE("exponent table") {
  auto prob = SchubertProblem::special(3, {1, 1, 1}, {1, 0}, pts({0, 1, 2}));
  // rho_l(z_j) = w_l(j) + p - l for special (1,0,0): (3, 1, 0)... rho_1 = 1+2
  CHECK(prob.rho(0, 0) == 3);
  CHECK(prob.rho(0, 1) == 1);
  CHECK(prob.rho(0, 2) == 0);
  // group 1 exponent: 2m(2) - m(1) - m(3) = -1; group 2: 2m(1)-m(0)-m(2) = 0
  CHECK(prob.point_exponent(1, 0) == -1);
  CHECK(prob.point_exponent(2, 0) == 0);
}
