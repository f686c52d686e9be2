#pragma once

#include <vector>

#include "wfock/params.hpp"
#include "wfock/qseries.hpp"
#include "wfock/rootdata.hpp"

namespace wfock {

/// Torus fixed point of the rank-r framed moduli space: one Young diagram
/// per framing weight.
struct FixedPoint {
  std::vector<Partition> diagrams;
  int total_size() const;
};

std::vector<FixedPoint> enumerate_fixed_points(int r, int d);

/// Equivariant weight c1 eps1 + c2 eps2 + sum_alpha m_alpha a_alpha with
/// integer coefficients, evaluated exactly at a parameter point.
struct LocalWeight {
  int c1 = 0;
  int c2 = 0;
  std::vector<int> framing;  // coefficients of a_1..a_r

  Rational evaluate(const ParamPoint& p) const;
};

/// Tangent weights at a fixed point: for each ordered pair (alpha, beta) and
/// each cell s of the alpha-th diagram the two weights
///   a_beta - a_alpha - eps1 leg_beta(s) + eps2 (arm_alpha(s) + 1),
///   a_alpha - a_beta + eps1 (leg_beta(s) + 1) - eps2 arm_alpha(s),
/// in total 2 r d of them. The formula is pinned by three oracles: the rank
/// one exponential identity, the hand-enumerated one-instanton sum and the
/// weight count.
std::vector<LocalWeight> tangent_weights(const FixedPoint& fp);

/// Instanton partition sum: coefficient of Q^d is the sum over size-d fixed
/// points of the product of reciprocal tangent weights. p.a carries the r
/// framing coordinates.
QSeries z_series(int r, int dmax, const ParamPoint& p);

/// Norm series of the rank-one Heisenberg coherent chain b_1 h^d = h^{d-1}
/// computed inside the Fock module with the diagonal color of pairing r.
QSeries heis_whittaker_series(int r, int dmax, const ParamPoint& p);

struct AgtReport {
  ParamPoint params;            // gl-style framing coordinates (r = 2)
  QSeries z;                    // rank-2 instanton sum
  QSeries heis;                 // diagonal Heisenberg chain norms, for the record
  std::vector<Rational> verma_norms;  // Whittaker norms of the quadratic generator chain
  std::vector<Rational> ratios;       // rho_d, degree 0..dmax
  bool power_law = false;             // rho_d = rho_1^d for every d
};

/// Compare the rank-2 instanton sum against the Whittaker norms of the
/// quadratic-generator chain at a^1 = a_1 - a_2.
///
/// The degree bookkeeping of the rank-2 framing forces the mode-one
/// component of the diagonal Heisenberg factor to annihilate the fundamental
/// classes, so the Heisenberg factor of the comparison collapses to its
/// degree-zero term and rho_d = Z_d divided by the d-th Whittaker norm. The
/// coherent-chain series H is still computed and reported; its own oracle is
/// the exact match with the rank-one instanton sum.
AgtReport agt_compare(int dmax, const ParamPoint& p_gl);

/// The same comparison for a rank-r framing against the Whittaker norms of
/// the full gl-coordinate generator family (one chain through the top,
/// degree-r generator). Reduces to agt_compare's content for r = 2 up to a
/// per-degree unit; the r = 3 case exercises the extracted cubic generator.
AgtReport agt_compare_gl(int r, int dmax, const ParamPoint& p_gl);

struct MonomialCheck {
  bool is_monomial = false;
  int sign = 0;      // +1 or -1
  long exp_eps1 = 0;
  long exp_eps2 = 0;
};

/// Determine sign and exponents of rho_1 = sign eps1^m eps2^n by exact
/// evaluation at parameter points with separately scaled eps; fails when
/// rho_1 is not a pure eps monomial (for instance if it kept a dependence).
MonomialCheck agt_ratio_monomial(const ParamPoint& base);

}  // namespace wfock
