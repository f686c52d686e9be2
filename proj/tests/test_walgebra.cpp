#include <random>

#include "doctest.h"
#include "test_helpers.hpp"
#include "wfock/walgebra.hpp"

using namespace wfock;

namespace {

// conformal state -1/4 m(-1)^2 |0> + 1/2 (eps1+eps2) m(-2) |0> of a rank-1
// oscillator, built by hand
FockState conformal_state(const ColorAlgebra& alg, const ParamPoint& p) {
  FockState w(alg, p, Sector::vacuum());
  w.add_term(MultiPartition({Partition({1, 1})}), frac(-1, 4));
  w.add_term(MultiPartition({Partition({2})}), p.eps_sum() / 2);
  return w;
}

}  // namespace

TEST_CASE("virasoro action on the highest weight vector") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a1);
  const ParamPoint p = testing::small_point(1);
  const FockState hw = FockState::ground(alg, p, Sector::module());

  FockState l0 = virasoro_mode(0, 0, hw);
  FockState expect = hw;
  expect *= frac(-1, 4) * (p.a[0] * p.a[0] - p.eps_sum() * p.eps_sum());
  CHECK(l0 == expect);

  CHECK(virasoro_mode(0, 2, hw).is_zero());
  CHECK(virasoro_mode(0, 1, hw).is_zero());

  // L_1 applied to m(-1)|a> gives eps1 eps2 (a + eps1 + eps2) |a>
  const FockState excited = apply_mode({0, -1}, hw);
  FockState l1 = virasoro_mode(0, 1, excited);
  FockState expect1 = hw;
  expect1 *= p.eps_prod() * (p.a[0] + p.eps_sum());
  CHECK(l1 == expect1);

  // L_{-1}|a> = -1/2 (a - eps1 - eps2) m(-1)|a>
  FockState lm1 = virasoro_mode(0, -1, hw);
  FockState expectm = excited;
  expectm *= (p.a[0] - p.eps_sum()) / -2;
  CHECK(lm1 == expectm);
}

TEST_CASE("virasoro relations with central term at small degree") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a1);
  const ParamPoint p = testing::small_point(1);
  const Rational ee = p.eps_prod();
  const Rational s2 = p.eps_sum() * p.eps_sum();
  for (int deg = 0; deg <= 3; ++deg) {
    for (const auto& b : fock_basis(alg, p, Sector::module(), deg)) {
      for (int m = -2; m <= 2; ++m) {
        for (int n = -2; n <= 2; ++n) {
          FockState lhs = virasoro_mode(0, m, virasoro_mode(0, n, b)) -
                          virasoro_mode(0, n, virasoro_mode(0, m, b));
          FockState rhs = virasoro_mode(0, m + n, b);
          rhs *= ee * Rational(m - n);
          if (m + n == 0) {
            FockState central = b;
            central *= ee * (ee + 6 * s2) * Rational((m * m * m - m)) / 12;
            rhs += central;
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("field reconstruction agrees with the direct virasoro formula") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a1);
  const ParamPoint p = testing::small_point(1);
  const FockState w = conformal_state(alg, p);
  std::mt19937_64 rng(7);
  for (int deg = 0; deg <= 3; ++deg) {
    const FockState s = testing::random_state(alg, p, Sector::module(), deg, rng);
    for (int n = -3; n <= 3; ++n) {
      CHECK(apply_field_mode(w, n, s) == virasoro_mode(0, n, s));
    }
  }
  // rank-one reconstruction: the state m(-1)|0> acts as the current itself
  FockState current(alg, p, Sector::vacuum());
  current.add_term(MultiPartition({Partition({1})}), Rational(1));
  for (int n = -2; n <= 2; ++n) {
    const FockState s = testing::random_state(alg, p, Sector::module(), 2, rng);
    CHECK(apply_field_mode(current, n, s) == apply_mode({0, n}, s));
  }
}

TEST_CASE("screening kills the conformal vector and maps the current to the marker") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a1);
  const ParamPoint p = testing::small_point(1);
  const ScreeningCombo combo = {1};

  FockState current(alg, p, Sector::vacuum());
  current.add_term(MultiPartition({Partition({1})}), Rational(1));
  const FockState img = apply_screening(combo, current);
  FockState expect = FockState::ground(alg, p, Sector::marked(combo));
  expect *= Rational(2) * p.eps1;
  CHECK(img == expect);

  CHECK(apply_screening(combo, conformal_state(alg, p)).is_zero());

  const auto sm = screening_matrix(alg, combo, 3, p);
  CHECK(sm.matrix.rows() == 2);  // partitions of 2
  CHECK(sm.matrix.cols() == 3);  // partitions of 3

  CHECK_THROWS_AS(apply_screening(combo, FockState::ground(alg, p, Sector::module())),
                  std::invalid_argument);
}

TEST_CASE("screening commutes with its virasoro modes") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a2);
  const ParamPoint p = testing::small_point(2);
  std::mt19937_64 rng(21);
  for (int color = 0; color < 2; ++color) {
    ScreeningCombo combo(2, 0);
    combo[static_cast<std::size_t>(color)] = 1;
    for (int deg = 0; deg <= 4; ++deg) {
      const FockState s = testing::random_state(alg, p, Sector::vacuum(), deg, rng);
      for (int n = -2; n <= 2; ++n) {
        const FockState lhs = apply_screening(combo, virasoro_mode(color, n, s));
        const FockState rhs = virasoro_mode(color, n, apply_screening(combo, s));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("orthogonal colors decouple from the screening") {
  const RootSystem a3 = RootSystem::type_a(3);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a3);
  const ParamPoint p = testing::small_point(3);
  ScreeningCombo combo = {1, 0, 0};
  std::mt19937_64 rng(5);
  for (int deg = 1; deg <= 3; ++deg) {
    const FockState s = testing::random_state(alg, p, Sector::vacuum(), deg, rng);
    for (int n : {-2, -1, 1, 2}) {
      // color 2 is orthogonal to color 0 in the A3 diagram
      const FockState lhs = apply_screening(combo, apply_mode({2, n}, s));
      const FockState rhs = apply_mode({2, n}, apply_screening(combo, s));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("kernel dimensions match the vacuum characters") {
  const ParamPoint p1 = testing::small_point(1);
  const WContext c1 = WContext::simple_root(RootSystem::type_a(1));
  const std::vector<int> expected1 = {0, 1, 1, 2, 2};
  for (int d = 1; d <= 5; ++d) {
    CHECK(static_cast<int>(kernel_basis(c1, d, p1).size()) ==
          expected1[static_cast<std::size_t>(d) - 1]);
  }

  const ParamPoint p2 = testing::small_point(2);
  const WContext c2 = WContext::simple_root(RootSystem::type_a(2));
  CHECK(kernel_basis(c2, 3, p2).size() == 2);
  // full character comparison: generator mode multisets of degrees (2, 3)
  const std::vector<int> expected2 = {0, 1, 2, 3};
  for (int d = 1; d <= 4; ++d) {
    CHECK(static_cast<int>(kernel_basis(c2, d, p2).size()) ==
          expected2[static_cast<std::size_t>(d) - 1]);
  }

  // every virasoro descendant of the vacuum lies in the kernel of its color
  std::mt19937_64 rng(3);
  const ColorAlgebra alg = ColorAlgebra::simple_root(RootSystem::type_a(2));
  const FockState vac = FockState::ground(alg, p2, Sector::vacuum());
  for (int color = 0; color < 2; ++color) {
    ScreeningCombo combo(2, 0);
    combo[static_cast<std::size_t>(color)] = 1;
    FockState desc = virasoro_mode(color, -2, virasoro_mode(color, -1, vac));
    CHECK(apply_screening(combo, desc).is_zero());
  }
}

TEST_CASE("generator extraction normalizations") {
  const ParamPoint p1 = testing::small_point(1);
  const WContext c1 = WContext::simple_root(RootSystem::type_a(1));
  const auto gens1 = extract_w_generators(c1, p1);
  REQUIRE(gens1.size() == 1);
  CHECK(gens1[0].cdeg == 2);
  CHECK(gens1[0].state == conformal_state(c1.alg, p1));

  const ParamPoint p2 = testing::small_point(2);
  const WContext c2 = WContext::simple_root(RootSystem::type_a(2));
  const auto gens2 = extract_w_generators(c2, p2);
  REQUIRE(gens2.size() == 2);
  CHECK(gens2[0].cdeg == 2);
  CHECK(gens2[1].cdeg == 3);
  // both generators commute with both screenings via their field modes
  std::mt19937_64 rng(17);
  for (const auto& g : gens2) {
    for (int color = 0; color < 2; ++color) {
      ScreeningCombo combo(2, 0);
      combo[static_cast<std::size_t>(color)] = 1;
      for (int n : {-2, -1, 0, 1, 2}) {
        for (int deg = 0; deg <= 3; ++deg) {
          const FockState s = testing::random_state(c2.alg, p2, Sector::vacuum(), deg, rng);
          const FockState lhs = apply_screening(combo, apply_field_mode(g.state, n, s));
          const FockState rhs = apply_field_mode(g.state, n, apply_screening(combo, s));
          CHECK(lhs == rhs);
        }
      }
    }
  }

  // swapping eps1 and eps2 leaves the normalized generators unchanged
  const auto gens2_swapped = extract_w_generators(c2, p2.swapped_eps());
  for (std::size_t k = 0; k < gens2.size(); ++k) {
    FockState relabeled(c2.alg, p2.swapped_eps(), Sector::vacuum());
    for (const auto& [key, c] : gens2[k].state.terms()) relabeled.add_term(key, c);
    CHECK(gens2_swapped[k].state == relabeled);
  }
}

TEST_CASE("theta compatibility of generator modes") {
  // <u, W_n v> = (-1)^{cdeg} <W_{-n} u, v>
  const ParamPoint p = testing::small_point(2);
  const WContext ctx = WContext::simple_root(RootSystem::type_a(2));
  const auto gens = extract_w_generators(ctx, p);
  const ParamPoint pneg = p.negated_a();
  const auto gens_neg = extract_w_generators(ctx, pneg);
  std::mt19937_64 rng(99);
  for (const auto& g : gens) {
    const auto& g_neg = gens_neg[static_cast<std::size_t>(g.kappa) - 1];
    const Rational sign = (g.cdeg % 2 == 0) ? 1 : -1;
    for (int n = -2; n <= 2; ++n) {
      for (int dv = 0; dv <= 3; ++dv) {
        const int du = dv - n;
        if (du < 0 || du > 3) continue;
        const FockState u = testing::random_state(ctx.alg, pneg, Sector::module(), du, rng);
        const FockState v = testing::random_state(ctx.alg, p, Sector::module(), dv, rng);
        const Rational lhs = fock_pairing(u, apply_field_mode(g.state, n, v));
        const Rational rhs = sign * fock_pairing(apply_field_mode(g_neg.state, -n, u), v);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("gl context generators and the diagonal current") {
  ParamPoint p;
  p.eps1 = frac(3, 7);
  p.eps2 = frac(-5, 11);
  p.a = {frac(9, 2), frac(-1, 3), frac(5, 6)};
  const WContext ctx = WContext::gl(3);
  const auto gens = extract_w_generators(ctx, p);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].cdeg == 1);
  CHECK(gens[1].cdeg == 2);
  CHECK(gens[2].cdeg == 3);
  // the degree-one generator is minus the diagonal current
  FockState expect(ctx.alg, p, Sector::vacuum());
  for (int i = 0; i < 3; ++i) {
    std::vector<Partition> comps(3);
    comps[static_cast<std::size_t>(i)] = Partition({1});
    expect.add_term(MultiPartition(comps), Rational(-1));
  }
  CHECK(gens[0].state == expect);
}

TEST_CASE("classical limit identities for the rank-one context") {
  const WContext ctx = WContext::simple_root(RootSystem::type_a(1));
  const auto report = classical_limit_check(ctx, 2, frac(2, 3), frac(-3, 5), {frac(7, 2)}, 24, 24);
  CHECK(report.raising_ok);
  CHECK(report.lowering_ok);
}
