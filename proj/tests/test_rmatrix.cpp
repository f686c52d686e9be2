#include "doctest.h"
#include "test_helpers.hpp"
#include "wfock/rmatrix.hpp"

using namespace wfock;

TEST_CASE("degree zero and one blocks of the rank-one intertwiner") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ParamPoint p = testing::small_point(1);
  const auto blocks = rmatrix_blocks(a1, 0, 1, p);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].matrix == RationalMatrix::Identity(1, 1));
  // solved by hand from the single lowering condition
  const Rational expected = -(p.a[0] + p.eps_sum()) / (p.a[0] - p.eps_sum());
  CHECK(blocks[1].matrix(0, 0) == expected);
}

TEST_CASE("unitarity of the rank-one intertwiner") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ParamPoint p = testing::small_point(1);
  CHECK(unitarity_check(a1, 0, 3, p));
}

TEST_CASE("intertwining extends to higher modes") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ParamPoint p = testing::small_point(1);
  CHECK(intertwiner_check(a1, 0, 3, 3, p));

  const RootSystem a2 = RootSystem::type_a(2);
  const ParamPoint p2 = testing::small_point(2);
  CHECK(intertwiner_check(a2, 0, 2, 3, p2));
  CHECK(intertwiner_check(a2, 1, 2, 3, p2));
}

TEST_CASE("braid relation for the linked pair") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ParamPoint p = testing::small_point(2);
  CHECK(ybe_check(a2, 0, 1, 1, p));
}

TEST_CASE("commuting relation for an orthogonal pair") {
  const RootSystem a3 = RootSystem::type_a(3);
  const ParamPoint p = testing::small_point(3);
  CHECK(commuting_check(a3, 0, 2, 1, p));
}

TEST_CASE("leading term of the rank-one intertwiner") {
  const RootSystem a1 = RootSystem::type_a(1);
  ParamPoint base = testing::small_point(1);
  base.a[0] = frac(7, 3);
  const auto rep = leading_term_check(a1, 0, 2, base, 14, 14);
  CHECK(rep.limit_ok);
  CHECK(rep.finite_tail);
}
