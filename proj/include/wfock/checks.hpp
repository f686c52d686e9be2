#pragma once

#include <string>
#include <vector>

#include "wfock/nekrasov.hpp"
#include "wfock/params.hpp"
#include "wfock/rmatrix.hpp"
#include "wfock/verma.hpp"
#include "wfock/walgebra.hpp"

namespace wfock::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Oscillator commutation relations for type A of the given rank, all mode
/// pairs |m|, |n| <= max_mode on every basis state of degree <= max_degree.
CheckResult heisenberg_relations(int rank, const ParamPoint& p, int max_mode, int max_degree);

/// Rank-one Virasoro relations with the exact central term
/// eps1 eps2 (eps1 eps2 + 6 (eps1+eps2)^2) (m^3 - m) / 12.
CheckResult virasoro_relations(const ParamPoint& p, int max_mode, int max_degree);

/// Pairing adjointness of oscillator modes on full bases.
CheckResult pairing_adjointness(int rank, const ParamPoint& p, int max_mode, int max_degree);

/// Screening charges commute with their own color's Virasoro modes.
CheckResult screening_commutation(int rank, const ParamPoint& p, int max_mode, int max_degree);

/// The conformal vector lies in the screening kernel.
CheckResult conformal_vector_in_kernel(const ParamPoint& p);

/// Joint-kernel dimensions against the vacuum character of the generator
/// degrees, d = 1..dmax.
CheckResult kernel_dimensions(int rank, const ParamPoint& p, int dmax);

/// Expected vacuum-character dimension at degree d for generators of the
/// given conformal degrees.
long w_vacuum_character(const std::vector<int>& degrees, int d);

/// Gram matrices: size equals the multipartition count and the determinant
/// is nonzero, d <= dmax.
CheckResult gram_nondegeneracy(int rank, const ParamPoint& p, int dmax);

/// Whittaker solve plus re-verification of the defining properties.
CheckResult whittaker_defining_property(int rank, const ParamPoint& p, int dmax);

/// Rank-one instanton sum equals the exponential series to order dmax.
CheckResult rank_one_exponential_oracle(const ParamPoint& p, int dmax);

/// Ratio power law of the instanton sum against the Whittaker norms, plus
/// the monomial shape of the degree-one ratio.
CheckResult agt_power_law(const ParamPoint& p_gl2, int dmax);

/// Both scaling-line factorizations: the instanton side for ranks <= 2 and
/// the Whittaker-norm side for the rank-one chain.
CheckResult factorization_limits(int dmax_deg);

/// eps -> 0 limit of eps1 eps2 <w^1|w^1> in two framing coordinates equals
/// minus the sum over i of prod_{j != i} (a_j - a_i)^{-2} (the recorded
/// global sign is minus one).
CheckResult specialized_norm_limit();

/// Classical-limit identities: rank-one simple-root context and the
/// three-coordinate gl context.
CheckResult classical_limits();

/// Unitarity, braid relation and leading-term battery.
CheckResult rmatrix_unitarity(const ParamPoint& p1, int dmax);
CheckResult rmatrix_braid(const ParamPoint& p2, int dmax);
CheckResult rmatrix_leading_term(const ParamPoint& p1, int dmax);

}  // namespace wfock::checks
