#include <random>

#include "doctest.h"
#include "test_helpers.hpp"
#include "wfock/fock.hpp"

using namespace wfock;

namespace {

FockState commutator(const HeisenbergMode& x, const HeisenbergMode& y, const FockState& s) {
  return apply_mode(x, apply_mode(y, s)) - apply_mode(y, apply_mode(x, s));
}

}  // namespace

TEST_CASE("oscillator relations on the highest weight vector") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a1);
  const ParamPoint p = testing::small_point(1);
  const FockState hw = FockState::ground(alg, p, Sector::module());

  const FockState comm = commutator({0, 1}, {0, -1}, hw);
  FockState expected = hw;
  expected *= Rational(-2) * p.eps_prod();
  CHECK(comm == expected);

  FockState zero_mode = apply_mode({0, 0}, hw);
  FockState scaled = hw;
  scaled *= p.a[0] - p.eps_sum();
  CHECK(zero_mode == scaled);

  CHECK(apply_mode({0, 3}, hw).is_zero());
}

TEST_CASE("full commutator check at small degrees") {
  for (int rank : {1, 2}) {
    const RootSystem rs = RootSystem::type_a(rank);
    const ColorAlgebra alg = ColorAlgebra::simple_root(rs);
    const ParamPoint p = testing::small_point(rank);
    for (int deg = 0; deg <= 3; ++deg) {
      for (const auto& basis : fock_basis(alg, p, Sector::module(), deg)) {
        for (int i = 0; i < rank; ++i) {
          for (int j = 0; j < rank; ++j) {
            for (int m = 1; m <= 3; ++m) {
              for (int n = -3; n <= 3; ++n) {
                if (n == 0) continue;
                FockState c = commutator({i, m}, {j, n}, basis);
                FockState expect = basis;
                expect *= (m == -n) ? Rational(-m) * rs.pairing(i, j) * p.eps_prod() : Rational(0);
                CHECK(c == expect);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("mode application rejects colors outside the algebra") {
  const ColorAlgebra alg = ColorAlgebra::simple_root(RootSystem::type_a(1));
  const ParamPoint p = testing::small_point(1);
  const FockState hw = FockState::ground(alg, p, Sector::module());
  CHECK_THROWS_AS(apply_mode({1, -1}, hw), std::out_of_range);
  CHECK_THROWS_AS(apply_mode({-1, 1}, hw), std::out_of_range);
}

TEST_CASE("degree grading of mode application") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a2);
  const ParamPoint p = testing::small_point(2);
  std::mt19937_64 rng(9);
  const FockState s = testing::random_state(alg, p, Sector::module(), 3, rng);
  for (int n : {-2, -1, 1, 2, 3}) {
    const FockState t = apply_mode({1, n}, s);
    if (!t.is_zero()) CHECK(t.degree() == 3 - n);
  }
}

TEST_CASE("theta is the stated involution") {
  const ParamPoint p = testing::small_point(1);
  const ThetaMode t2 = theta({0, 2}, p);
  CHECK(t2.flipped.mode == -2);
  CHECK(t2.scalar == 0);
  const ThetaMode t0 = theta({0, 0}, p);
  CHECK(t0.flipped.mode == 0);
  CHECK(t0.scalar == Rational(-2) * p.eps_sum());

  // anti-involution on words of length <= 3: <u, (m1 m2 m3) v> = <theta(word) u, v>
  const RootSystem a1 = RootSystem::type_a(1);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a1);
  const ParamPoint pneg = p.negated_a();
  std::mt19937_64 rng(42);
  const std::vector<std::vector<HeisenbergMode>> words = {
      {{0, 1}},
      {{0, -2}, {0, 1}},
      {{0, 0}, {0, 2}, {0, -1}},
      {{0, -1}, {0, -1}, {0, 2}},
  };
  for (const auto& word : words) {
    for (int du = 0; du <= 3; ++du) {
      int shift = 0;
      for (const auto& m : word) shift += m.mode;
      const int dv = du - shift;
      if (dv < 0 || dv > 4) continue;
      const FockState u = testing::random_state(alg, pneg, Sector::module(), du, rng);
      const FockState v = testing::random_state(alg, p, Sector::module(), dv, rng);
      CHECK(fock_pairing(u, apply_word(word, v)) == fock_pairing(apply_theta_word(word, u), v));
    }
  }
}

TEST_CASE("pairing normalization and stated values") {
  const RootSystem a1 = RootSystem::type_a(1);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a1);
  const ParamPoint p = testing::small_point(1);
  const ParamPoint pneg = p.negated_a();
  const FockState ket = FockState::ground(alg, p, Sector::module());
  const FockState bra = FockState::ground(alg, pneg, Sector::module());
  CHECK(fock_pairing(bra, ket) == 1);

  const FockState bra1 = apply_mode({0, -1}, bra);
  const FockState ket2 = apply_mode({0, -2}, ket);
  CHECK(fock_pairing(bra1, ket2) == 0);

  const FockState ket1 = apply_mode({0, -1}, ket);
  CHECK(fock_pairing(bra1, ket1) == Rational(2) * p.eps_prod());

  ParamPoint bad = pneg;
  bad.a[0] += 1;
  CHECK_THROWS_AS(fock_pairing(FockState::ground(alg, bad, Sector::module()), ket1),
                  std::invalid_argument);
}

TEST_CASE("adjointness for every mode on random states") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a2);
  const ParamPoint p = testing::small_point(2);
  const ParamPoint pneg = p.negated_a();
  std::mt19937_64 rng(1001);
  for (int color = 0; color < 2; ++color) {
    for (int n = -4; n <= 4; ++n) {
      for (int dv = 0; dv <= 4; ++dv) {
        const int du = dv - n;
        if (du < 0 || du > 4) continue;
        const FockState u = testing::random_state(alg, pneg, Sector::module(), du, rng);
        const FockState v = testing::random_state(alg, p, Sector::module(), dv, rng);
        const std::vector<HeisenbergMode> word = {{color, n}};
        CHECK(fock_pairing(u, apply_word(word, v)) == fock_pairing(apply_theta_word(word, u), v));
      }
    }
  }
}

TEST_CASE("marked sector zero modes") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a2);
  const ParamPoint p = testing::small_point(2);
  const FockState marked = FockState::ground(alg, p, Sector::marked_color(0, 2));
  for (int j = 0; j < 2; ++j) {
    const FockState z = apply_mode({j, 0}, marked);
    FockState expect = marked;
    expect *= -p.eps1 * Rational(a2.pairing(0, j));
    CHECK(z == expect);
  }
  // vacuum zero modes vanish
  const FockState vac = FockState::ground(alg, p, Sector::vacuum());
  CHECK(apply_mode({0, 0}, vac).is_zero());
}

TEST_CASE("gl color algebra reproduces the simple-root convention") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ColorAlgebra gl = ColorAlgebra::gl(3);
  ParamPoint p_gl;
  p_gl.eps1 = frac(3, 7);
  p_gl.eps2 = frac(-5, 11);
  p_gl.a = {frac(9, 2), frac(-1, 3), frac(5, 6)};
  const FockState hw = FockState::ground(gl, p_gl, Sector::module());
  // differences of gl zero modes give a^i - (eps1+eps2)
  for (int i = 0; i < 2; ++i) {
    FockState diff = apply_mode({i, 0}, hw) - apply_mode({i + 1, 0}, hw);
    FockState expect = hw;
    expect *= (p_gl.a[static_cast<std::size_t>(i)] - p_gl.a[static_cast<std::size_t>(i) + 1]) -
              p_gl.eps_sum();
    CHECK(diff == expect);
  }
  // pairing is the identity
  const FockState c = commutator({0, 2}, {1, -2}, hw);
  CHECK(c.is_zero());
  const FockState c2 = commutator({1, 2}, {1, -2}, hw);
  FockState expect2 = hw;
  expect2 *= Rational(-2) * p_gl.eps_prod();
  CHECK(c2 == expect2);
  (void)a2;
}

TEST_CASE("coordinates round-trip through the canonical basis") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ColorAlgebra alg = ColorAlgebra::simple_root(a2);
  const ParamPoint p = testing::small_point(2);
  std::mt19937_64 rng(77);
  const FockState s = testing::random_state(alg, p, Sector::module(), 3, rng);
  const RationalVector v = fock_coordinates(s, 3);
  const auto basis = fock_basis(alg, p, Sector::module(), 3);
  FockState rebuilt(alg, p, Sector::module());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    FockState t = basis[i];
    t *= v(static_cast<Eigen::Index>(i));
    rebuilt += t;
  }
  CHECK(rebuilt == s);
}

TEST_CASE("diagonal color algebra carries pairing r") {
  const ColorAlgebra diag = ColorAlgebra::diagonal(2);
  ParamPoint p;
  p.eps1 = frac(3, 7);
  p.eps2 = frac(-5, 11);
  p.a = {Rational(0)};
  const FockState vac = FockState::ground(diag, p, Sector::vacuum());
  const FockState c = commutator({0, 1}, {0, -1}, vac);
  FockState expect = vac;
  expect *= Rational(-2) * p.eps_prod();
  CHECK(c == expect);
}
