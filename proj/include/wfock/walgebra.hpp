#pragma once

#include <string>
#include <vector>

#include "wfock/fock.hpp"
#include "wfock/linalg.hpp"
#include "wfock/mpoly.hpp"
#include "wfock/params.hpp"
#include "wfock/rootdata.hpp"

namespace wfock {

// ---------------------------------------------------------------------------
// Virasoro generators and field reconstruction
// ---------------------------------------------------------------------------

/// Modified Virasoro generator of one color,
///   L_n = -1/4 sum_m :m(i,a) m(i,n-a): - (n+1)/2 (eps1+eps2) m(i,n),
/// acting on any sector. The sum is finite on every state.
FockState virasoro_mode(int color, int n, const FockState& s);

/// Apply the n-th Fourier mode of the field reconstructed from a vacuum
/// state w: a monomial of creation modes (n_1, ..., n_k) becomes the
/// normal-ordered product of (n_j - 1)-fold derivatives of the currents over
/// (n_j - 1)!, and the mode sum truncates by the target's degree.
FockState apply_field_mode(const FockState& w, int n, const FockState& target);

// ---------------------------------------------------------------------------
// Screening operators
// ---------------------------------------------------------------------------

/// Integer color combination defining one screening charge; the screening
/// oscillator is beta_n = sum_k combo_k m(k, n) / eps2.
using ScreeningCombo = std::vector<int>;

struct ScreeningMatrix {
  ScreeningCombo combo;
  int degree = 0;
  /// Rows: marked-sector basis of degree-1 lower; columns: vacuum basis.
  RationalMatrix matrix;
};

/// The degree-lowering-by-one Fourier component of the screening vertex
/// operator: chi = sum_{p >= 0} Vminus_[p] Vplus_[p+1], where Vminus_[p] is
/// the degree-p creation coefficient of exp(-sum_{n<0} beta_n z^{-n}/n) and
/// Vplus_[q] the degree-q annihilation coefficient of the positive-mode
/// exponential. Maps vacuum degree d to marked degree d-1; the momentum
/// zero-mode factor is dropped, which is what restricts the source to the
/// vacuum sector.
ScreeningMatrix screening_matrix(const ColorAlgebra& alg, const ScreeningCombo& combo, int degree,
                                 const ParamPoint& p);

/// Apply the screening charge to a vacuum-sector state (throws otherwise).
FockState apply_screening(const ScreeningCombo& combo, const FockState& s);

// ---------------------------------------------------------------------------
// W-algebra generators
// ---------------------------------------------------------------------------

/// Everything the generator extraction needs: the oscillator colors, the
/// screening charges whose joint kernel is the algebra, the conformal degree
/// of each generator and the invariant polynomial pinning its leading
/// (all-modes-minus-one) part.
struct WContext {
  ColorAlgebra alg;
  std::vector<ScreeningCombo> screenings;
  std::vector<int> degrees;
  std::vector<MPoly> leading;

  /// Simple-root realization for a simply-laced system. Leading terms for
  /// type A are the elementary symmetric polynomials in gl coordinates
  /// composed with the trace-zero section; D/E callers must supply their own
  /// invariant table.
  static WContext simple_root(const RootSystem& rs);
  static WContext simple_root(const RootSystem& rs, std::vector<MPoly> invariant_table);

  /// gl-coordinate realization for type A with r colors. Generators of
  /// degree p = 1..r; the leading term is fixed as -e_p, the sign matching
  /// the contragredient convention of the lowered basis (recorded once, see
  /// classical_limit_check).
  static WContext gl(int r);
};

struct WGenerator {
  int kappa;  // 1-based
  int cdeg;
  FockState state;  // vacuum sector, degree cdeg
};

/// Exact basis of the joint screening kernel inside the degree-d vacuum
/// space.
std::vector<FockState> kernel_basis(const WContext& ctx, int degree, const ParamPoint& p);

/// Extract the normalized generators: for each kappa a degree-(d_kappa+1)
/// kernel element whose leading part equals the context's invariant
/// polynomial in the minus-one modes. The lower-order ambiguity (kernel
/// elements built from lower generators) is removed deterministically by
/// reducing against that subspace in the canonical basis order.
std::vector<WGenerator> extract_w_generators(const WContext& ctx, const ParamPoint& p);

// ---------------------------------------------------------------------------
// Classical limit
// ---------------------------------------------------------------------------

struct ClassicalLimitReport {
  bool raising_ok = false;        // mode +1 identity for every generator
  bool lowering_ok = false;       // scaled mode -1 identity for every generator
  std::vector<std::string> notes;
};

/// Verifies the eps -> 0 operator identities on module states of degree <= d
/// along the scaling line eps = t (u1, u2): the limit of the matrix of
/// W^(kappa)_1 equals the polarized invariant polynomial in the mode-(+1)
/// oscillators, and the limit of (eps1 eps2)^{-1} W^(kappa)_{-1} equals the
/// polarized polynomial in the lowered mode-(-1) oscillators. Matrices are
/// taken in the lowered basis (each creation mode divided by eps1 eps2) and
/// reconstructed entrywise by exact rational interpolation in t.
ClassicalLimitReport classical_limit_check(const WContext& ctx, int max_degree,
                                           const Rational& u1, const Rational& u2,
                                           const std::vector<Rational>& a,
                                           int num_degree_bound = 48, int den_degree_bound = 48);

}  // namespace wfock
