#pragma once

#include <vector>

#include "wfock/fock.hpp"
#include "wfock/linalg.hpp"
#include "wfock/params.hpp"
#include "wfock/rootdata.hpp"

namespace wfock {

/// Degree block of the reflection operator from the module at a to the
/// module at s_i a, in the canonical multipartition bases.
struct RBlock {
  int color = 0;
  int degree = 0;
  RationalMatrix matrix;
};

/// All blocks 0..dmax of the unique normalized intertwiner: it commutes
/// with the color-i Virasoro modes (n = 0, +-1, +-2 imposed) and with every
/// oscillator combination orthogonal to color i, and fixes the highest
/// weight vector. Each block is obtained by exact linear solving; a solution
/// space of dimension other than one raises NonGenericPointError.
std::vector<RBlock> rmatrix_blocks(const RootSystem& rs, int color, int dmax, const ParamPoint& p);

RBlock rmatrix_block(const RootSystem& rs, int color, int degree, const ParamPoint& p);

/// Composite R_i(s_i a) R_i(a) equals the identity on every degree <= dmax.
bool unitarity_check(const RootSystem& rs, int color, int dmax, const ParamPoint& p);

/// Intertwining against modes |n| <= nmax (beyond the imposed window).
bool intertwiner_check(const RootSystem& rs, int color, int dmax, int nmax, const ParamPoint& p);

/// Braid relation for two linked colors (rank-2 subsystem):
/// R_j(s_i s_j a) R_i(s_j a) R_j(a) = R_i(s_j s_i a) R_j(s_i a) R_i(a).
bool ybe_check(const RootSystem& rs, int color_i, int color_j, int dmax, const ParamPoint& p);

/// Commuting relation R_i(s_j a) R_j(a) = R_j(s_i a) R_i(a) for orthogonal
/// colors.
bool commuting_check(const RootSystem& rs, int color_i, int color_j, int dmax, const ParamPoint& p);

struct LeadingTermReport {
  bool limit_ok = false;     // blocks tend to the signed identity below
  bool finite_tail = false;  // at finite scale the block is not already the limit
};

/// Send a^i to infinity along a^i = N base_coordinate and reconstruct each
/// block entry as a rational function of 1/N. The limit is diagonal with
/// entry (-1)^k on a monomial carrying k oscillators of the reflected
/// color: -1 on the degree-one block, the signed identity beyond.
LeadingTermReport leading_term_check(const RootSystem& rs, int color, int dmax, const ParamPoint& base,
                                     int num_degree_bound = 24, int den_degree_bound = 24);

}  // namespace wfock
