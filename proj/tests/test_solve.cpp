#include "wronsky/solve.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace wronsky;
using schubert::Box;
using schubert::SchubertIndex;

namespace {

using C = Complex128;
using R = Real128;

MarkedPoints pts(std::initializer_list<long> xs) {
  std::vector<GaussRat> z;
  for (long x : xs) z.emplace_back(Rational(x));
  return MarkedPoints(z);
}

}  // namespace

TEST_CASE("worked p=2 instance: single orbit at 1/2") {
  Box b{2, 2};
  auto prob = SchubertProblem::build(2, 2, pts({0, 1}),
                                     {SchubertIndex({1, 0}, b),
                                      SchubertIndex({1, 0}, b),
                                      SchubertIndex({0, 0}, b)});
  auto out = solve_at<128>(prob, SolveBudget{}, 7);
  CHECK(out.complete);
  REQUIRE(out.orbits.size() == 1);
  CHECK(abs(out.orbits[0].rep.groups[0][0] - C(R(1) / 2)) < R(1e-30));
  CHECK(out.orbits[0].residual_norm <= pow(R(10), -32));
  CHECK(abs(exp(out.orbits[0].log_value) - C(-4)) < R(1e-30));
}

TEST_CASE("p=3 special single-variable: both quadratic roots found") {
  auto prob = SchubertProblem::special(3, {1, 1, 1}, {1, 0}, pts({0, 1, 2}));
  auto out = solve_at<128>(prob, SolveBudget{}, 19);
  CHECK(out.complete);
  REQUIRE(out.orbits.size() == 2);
  R s3 = 1 / sqrt(R(3));
  // canonical order sorts by real part: 1 - 1/sqrt3 first
  CHECK(abs(out.orbits[0].rep.groups[0][0] - C(R(1) - s3)) < R(1e-30));
  CHECK(abs(out.orbits[1].rep.groups[0][0] - C(R(1) + s3)) < R(1e-30));
}

TEST_CASE("two-variable spin chain: two orbits, deterministic") {
  auto prob = SchubertProblem::special(2, {1, 1, 1, 1}, {2}, pts({0, 1, 3, 7}));
  auto out = solve_at<128>(prob, SolveBudget{}, 99);
  CHECK(out.lr_bound == 2);
  CHECK(out.complete);
  REQUIRE(out.orbits.size() == 2);
  for (const auto& orbit : out.orbits) {
    CHECK(orbit.residual_norm <= pow(R(10), -32));
    auto adm = is_admissible(prob, orbit.rep, default_sep_tol<128>());
    CHECK(adm.ok);
  }
  // determinism: the exact same outcome for the same seed
  auto again = solve_at<128>(prob, SolveBudget{}, 99);
  REQUIRE(again.orbits.size() == out.orbits.size());
  for (size_t i = 0; i < out.orbits.size(); ++i)
    for (size_t g = 0; g < out.orbits[i].rep.groups.size(); ++g)
      for (size_t l = 0; l < out.orbits[i].rep.groups[g].size(); ++l)
        CHECK(out.orbits[i].rep.groups[g][l] ==
              again.orbits[i].rep.groups[g][l]);
}

TEST_CASE("no variables: the empty orbit") {
  auto prob = SchubertProblem::special(3, {2, 2}, {0, 0}, pts({0, 1}));
  CHECK(prob.num_variables() == 0);
  CHECK(prob.lr_bound() == 1);
  auto out = solve_at<128>(prob, SolveBudget{}, 1);
  CHECK(out.complete);
  REQUIRE(out.orbits.size() == 1);
  CHECK(out.orbits[0].rep.total() == 0);
}

TEST_CASE("budget exhaustion reports a partial result") {
  auto prob = SchubertProblem::special(2, {1, 1, 1, 1}, {2}, pts({0, 1, 3, 7}));
  SolveBudget tiny;
  tiny.starts = 1;
  auto out = solve_at<128>(prob, tiny, 5);
  CHECK(out.orbits.size() <= 2);
  if (out.orbits.size() < 2) CHECK(!out.complete);
}

TEST_CASE("count never exceeds the LR bound on mixed instances") {
  Box b{3, 4};
  auto prob = SchubertProblem::build(
      3, 4, pts({0, 1}),
      {SchubertIndex({2, 1, 0}, b), SchubertIndex({2, 1, 0}, b),
       SchubertIndex({0, 0, 0}, b)});
  auto out = solve_at<128>(prob, SolveBudget{}, 3);
  CHECK(long(out.orbits.size()) <= out.lr_bound);
  for (const auto& orbit : out.orbits)
    CHECK(orbit.residual_norm <= pow(R(10), -32));
}

TEST_CASE("higher rung solves too") {
  Box b{2, 2};
  auto prob = SchubertProblem::build(2, 2, pts({0, 1}),
                                     {SchubertIndex({1, 0}, b),
                                      SchubertIndex({1, 0}, b),
                                      SchubertIndex({0, 0}, b)});
  auto out = solve_at<256>(prob, SolveBudget{}, 7);
  CHECK(out.complete);
  REQUIRE(out.orbits.size() == 1);
  CHECK(out.orbits[0].residual_norm <= pow(Real<256>(10), -64));
}
