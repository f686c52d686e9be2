#include <random>

#include "doctest.h"
#include "test_helpers.hpp"
#include "wfock/ratinterp.hpp"
#include "wfock/verma.hpp"

using namespace wfock;

TEST_CASE("pbw action basics") {
  const ParamPoint p = testing::small_point(1);
  const WContext ctx = WContext::simple_root(RootSystem::type_a(1));
  const auto gens = extract_w_generators(ctx, p);
  const FockState hw = FockState::ground(ctx.alg, p, Sector::module());

  CHECK(pbw_action(gens, MultiPartition({Partition()}), hw) == hw);

  // single lowering step: -1/2 (a - eps1 - eps2) m(-1) |a>
  const FockState v = pbw_action(gens, MultiPartition({Partition({1})}), hw);
  FockState expect = apply_mode({0, -1}, hw);
  expect *= (p.a[0] - p.eps_sum()) / -2;
  CHECK(v == expect);
  CHECK(v == virasoro_mode(0, -1, hw));

  // degree additivity
  const FockState w = pbw_action(gens, MultiPartition({Partition({2, 1})}), hw);
  CHECK(w.degree() == 3);
}

TEST_CASE("gram matrix values and symmetry") {
  const ParamPoint p = testing::small_point(1);
  const WContext ctx = WContext::simple_root(RootSystem::type_a(1));
  const auto gens = extract_w_generators(ctx, p);

  const GramMatrix g1 = gram_matrix(gens, 1, p);
  REQUIRE(g1.entries.rows() == 1);
  const Rational expected =
      frac(-1, 2) * p.eps_prod() * (p.a[0] * p.a[0] - p.eps_sum() * p.eps_sum());
  CHECK(g1.entries(0, 0) == expected);

  const GramMatrix g2 = gram_matrix(gens, 2, p);
  REQUIRE(g2.entries.rows() == 2);
  CHECK(determinant_of(g2.entries) != 0);

  // K at a equals the transpose of K at -a
  const ParamPoint pneg = p.negated_a();
  const auto gens_neg = extract_w_generators(ctx, pneg);
  for (int d = 1; d <= 4; ++d) {
    const GramMatrix ga = gram_matrix(gens, d, p);
    const GramMatrix gb = gram_matrix(gens_neg, d, pneg);
    CHECK(ga.entries == gb.entries.transpose().eval());
    CHECK(static_cast<long>(ga.basis.size()) ==
          static_cast<long>(enumerate_multipartitions(1, d).size()));
  }
}

TEST_CASE("gram matrix for the rank-two algebra") {
  const ParamPoint p = testing::small_point(2);
  const WContext ctx = WContext::simple_root(RootSystem::type_a(2));
  const auto gens = extract_w_generators(ctx, p);
  for (int d = 1; d <= 3; ++d) {
    const GramMatrix g = gram_matrix(gens, d, p);
    CHECK(g.entries.rows() == static_cast<Eigen::Index>(enumerate_multipartitions(2, d).size()));
    CHECK(determinant_of(g.entries) != 0);
  }
  // symmetry under the simultaneous swap
  const ParamPoint pneg = p.negated_a();
  const auto gens_neg = extract_w_generators(ctx, pneg);
  for (int d = 1; d <= 3; ++d) {
    const GramMatrix ga = gram_matrix(gens, d, p);
    const GramMatrix gb = gram_matrix(gens_neg, d, pneg);
    CHECK(ga.entries == gb.entries.transpose().eval());
  }
}

TEST_CASE("whittaker vectors for the virasoro chain") {
  const ParamPoint p = testing::small_point(1);
  const WContext ctx = WContext::simple_root(RootSystem::type_a(1));
  const auto gens = extract_w_generators(ctx, p);
  const auto ws = whittaker(gens, 3, p);
  REQUIRE(ws.size() == 4);
  CHECK(ws[0].norm == 1);

  const Rational k1 = frac(-1, 2) * p.eps_prod() * (p.a[0] * p.a[0] - p.eps_sum() * p.eps_sum());
  CHECK(ws[1].norm == Rational(1) / k1);
  CHECK(ws[1].norm ==
        Rational(-2) / (p.eps_prod() * (p.a[0] * p.a[0] - p.eps_sum() * p.eps_sum())));

  const auto verification = verify_whittaker(gens, ws, p);
  CHECK(verification.pairing_ok);
  CHECK(verification.chain_ok);
  CHECK(verification.annihilation_ok);
}

TEST_CASE("whittaker vectors for the rank-two algebra") {
  const ParamPoint p = testing::small_point(2);
  const WContext ctx = WContext::simple_root(RootSystem::type_a(2));
  const auto gens = extract_w_generators(ctx, p);
  const auto ws = whittaker(gens, 2, p);
  const auto verification = verify_whittaker(gens, ws, p);
  CHECK(verification.pairing_ok);
  CHECK(verification.chain_ok);
  CHECK(verification.annihilation_ok);
}

TEST_CASE("whittaker norm factorization along a scaling line") {
  // (eps1 eps2)^d <w^d|w^d> tends to (1/d!) (eps1 eps2 <w^1|w^1>)^d
  const WContext ctx = WContext::simple_root(RootSystem::type_a(1));
  const Rational u1 = frac(2, 3);
  const Rational u2 = frac(-3, 5);
  const std::vector<Rational> a = {frac(7, 2)};
  const int nb = 24, db = 24;
  const int needed = nb + db + 2;
  std::vector<std::vector<RationalSample>> samples(4);
  int collected = 0;
  for (long tval = 1; collected < needed && tval < 16 * needed; ++tval) {
    ParamPoint p;
    p.eps1 = Rational(tval) * u1;
    p.eps2 = Rational(tval) * u2;
    p.a = a;
    try {
      const auto gens = extract_w_generators(ctx, p);
      const auto ws = whittaker(gens, 3, p);
      Rational scale(1);
      for (int d = 1; d <= 3; ++d) {
        scale *= p.eps_prod();
        samples[static_cast<std::size_t>(d)].emplace_back(Rational(tval), scale * ws[static_cast<std::size_t>(d)].norm);
      }
    } catch (const NonGenericPointError&) {
      continue;
    }
    ++collected;
  }
  REQUIRE(collected >= needed);
  const Rational lim1 = limit_at_zero(samples[1], nb, db);
  // gl-style specialized norm: sum over i of prod_{j != i} (a_j - a_i)^{-2}
  // evaluated for the two-coordinate framing (a/2, -a/2), with one recorded
  // global sign
  CHECK(lim1 == Rational(-2) / (a[0] * a[0]));
  Rational fact(1);
  Rational power(1);
  for (int d = 2; d <= 3; ++d) {
    fact *= d;
    power = power * lim1;
    const Rational lim = limit_at_zero(samples[static_cast<std::size_t>(d)], nb, db);
    CHECK(lim == power * lim1 / fact);
  }
}
