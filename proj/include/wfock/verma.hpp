#pragma once

#include <vector>

#include "wfock/fock.hpp"
#include "wfock/linalg.hpp"
#include "wfock/rootdata.hpp"
#include "wfock/walgebra.hpp"

namespace wfock {

/// PBW monomial W[lambda] applied to a highest-weight state: for each color
/// kappa the lowering modes of the kappa-th generator with the parts of
/// lambda's kappa-th partition, rightmost factor applied first.
FockState pbw_action(const std::vector<WGenerator>& gens, const MultiPartition& lambda,
                     const FockState& hw);

/// The contragredient word theta(W[lambda]) applied to a state: raising
/// modes in reversed order with the sign (-1)^{sum (cdeg) over parts}.
FockState theta_pbw_action(const std::vector<WGenerator>& gens, const MultiPartition& lambda,
                           const FockState& s);

struct GramMatrix {
  int degree = 0;
  std::vector<MultiPartition> basis;  // canonical order
  RationalMatrix entries;             // K_{lambda mu} = <-a| theta(W[lambda]) W[mu] |a>
};

GramMatrix gram_matrix(const std::vector<WGenerator>& gens, int degree, const ParamPoint& p);

struct WhittakerVector {
  int degree = 0;
  std::vector<MultiPartition> basis;
  RationalVector coeffs;  // expansion over W[mu]|a>
  Rational norm;          // <w^d | w^d> = inverse Gram at the chain index
};

struct WhittakerVerification {
  bool pairing_ok = false;     // <-a| theta(W[lambda]) |w^d> = delta_{lambda, lambda0}
  bool chain_ok = false;       // top-generator mode 1 steps down the chain
  bool annihilation_ok = false;  // every other positive mode kills w^d
};

/// Solve K^d x = e_{lambda0} for d = 0..dmax, lambda0 = (empty,...,(1^d)).
std::vector<WhittakerVector> whittaker(const std::vector<WGenerator>& gens, int dmax,
                                       const ParamPoint& p);

/// Re-derive the defining properties of the solved vectors by direct
/// operator application. The chain constant of the top generator is
/// (-1)^{cdeg of the top generator}: +1 for a quadratic top generator, and
/// the bookkeeping sign of the contragredient convention in general.
WhittakerVerification verify_whittaker(const std::vector<WGenerator>& gens,
                                       const std::vector<WhittakerVector>& ws, const ParamPoint& p);

/// Index of lambda0 = (empty, ..., empty, (1^d)) in the canonical order.
std::size_t whittaker_source_index(int colors, int degree);

FockState whittaker_state(const std::vector<WGenerator>& gens, const WhittakerVector& w,
                          const ParamPoint& p);

}  // namespace wfock
