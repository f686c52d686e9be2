#include "wfock/verma.hpp"

#include <stdexcept>

namespace wfock {

FockState pbw_action(const std::vector<WGenerator>& gens, const MultiPartition& lambda,
                     const FockState& hw) {
  if (lambda.colors() != static_cast<int>(gens.size()))
    throw std::invalid_argument("pbw_action: partition colors must match the generator count");
  FockState cur = hw;
  for (int kappa = lambda.colors() - 1; kappa >= 0; --kappa) {
    const auto& parts = lambda.component(kappa).parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      cur = apply_field_mode(gens[static_cast<std::size_t>(kappa)].state, -*it, cur);
    }
  }
  return cur;
}

FockState theta_pbw_action(const std::vector<WGenerator>& gens, const MultiPartition& lambda,
                           const FockState& s) {
  // theta reverses the word and maps each lowering mode to
  // (-1)^{cdeg} times the raising mode; reversing W[lambda] means applying
  // the raising modes in the original reading order.
  FockState cur = s;
  int sign_exp = 0;
  for (int kappa = 0; kappa < lambda.colors(); ++kappa) {
    const auto& parts = lambda.component(kappa).parts();
    const int cdeg = gens[static_cast<std::size_t>(kappa)].cdeg;
    sign_exp += cdeg * lambda.component(kappa).length();
    for (int part : parts) {
      cur = apply_field_mode(gens[static_cast<std::size_t>(kappa)].state, part, cur);
      if (cur.is_zero()) break;
    }
  }
  if (sign_exp % 2 != 0) cur *= Rational(-1);
  return cur;
}

GramMatrix gram_matrix(const std::vector<WGenerator>& gens, int degree, const ParamPoint& p) {
  GramMatrix gm;
  gm.degree = degree;
  gm.basis = enumerate_multipartitions(static_cast<int>(gens.size()), degree);
  const Eigen::Index n = static_cast<Eigen::Index>(gm.basis.size());
  gm.entries = RationalMatrix::Zero(n, n);
  const ColorAlgebra& alg = gens.front().state.algebra();
  const MultiPartition empty{std::vector<Partition>(static_cast<std::size_t>(alg.colors()))};
  const FockState hw = FockState::ground(alg, p, Sector::module());
  std::vector<FockState> columns;
  columns.reserve(static_cast<std::size_t>(n));
  for (const auto& mu : gm.basis) columns.push_back(pbw_action(gens, mu, hw));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const FockState moved =
          theta_pbw_action(gens, gm.basis[static_cast<std::size_t>(r)], columns[static_cast<std::size_t>(c)]);
      gm.entries(r, c) = moved.coefficient(empty);
    }
  }
  return gm;
}

std::size_t whittaker_source_index(int colors, int degree) {
  const auto basis = enumerate_multipartitions(colors, degree);
  std::vector<Partition> comps(static_cast<std::size_t>(colors));
  if (degree > 0)
    comps[static_cast<std::size_t>(colors) - 1] = Partition(std::vector<int>(static_cast<std::size_t>(degree), 1));
  const MultiPartition lambda0{std::move(comps)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == lambda0) return i;
  }
  throw std::logic_error("whittaker_source_index: lambda0 not found");
}

std::vector<WhittakerVector> whittaker(const std::vector<WGenerator>& gens, int dmax,
                                       const ParamPoint& p) {
  std::vector<WhittakerVector> out;
  for (int d = 0; d <= dmax; ++d) {
    const GramMatrix gm = gram_matrix(gens, d, p);
    WhittakerVector w;
    w.degree = d;
    w.basis = gm.basis;
    RationalVector rhs = RationalVector::Zero(gm.entries.rows());
    const std::size_t idx = whittaker_source_index(static_cast<int>(gens.size()), d);
    rhs(static_cast<Eigen::Index>(idx)) = 1;
    try {
      w.coeffs = solve_linear(gm.entries, rhs);
    } catch (const SingularMatrixError&) {
      throw NonGenericPointError("whittaker: singular Kac-Shapovalov form, resample");
    }
    w.norm = w.coeffs(static_cast<Eigen::Index>(idx));
    out.push_back(std::move(w));
  }
  return out;
}

FockState whittaker_state(const std::vector<WGenerator>& gens, const WhittakerVector& w,
                          const ParamPoint& p) {
  const ColorAlgebra& alg = gens.front().state.algebra();
  const FockState hw = FockState::ground(alg, p, Sector::module());
  FockState acc(alg, p, Sector::module());
  for (std::size_t i = 0; i < w.basis.size(); ++i) {
    const Rational& c = w.coeffs(static_cast<Eigen::Index>(i));
    if (c == 0) continue;
    FockState t = pbw_action(gens, w.basis[i], hw);
    t *= c;
    acc += t;
  }
  return acc;
}

WhittakerVerification verify_whittaker(const std::vector<WGenerator>& gens,
                                       const std::vector<WhittakerVector>& ws, const ParamPoint& p) {
  WhittakerVerification v;
  const ColorAlgebra& alg = gens.front().state.algebra();
  const MultiPartition empty{std::vector<Partition>(static_cast<std::size_t>(alg.colors()))};
  const int top = static_cast<int>(gens.size()) - 1;
  // chain constant of the solved normalization, see header
  const Rational chain_sign = (gens[static_cast<std::size_t>(top)].cdeg % 2 == 0) ? 1 : -1;

  v.pairing_ok = true;
  v.chain_ok = true;
  v.annihilation_ok = true;
  std::vector<FockState> states;
  for (const auto& w : ws) states.push_back(whittaker_state(gens, w, p));

  for (std::size_t d = 0; d < ws.size(); ++d) {
    const auto basis = enumerate_multipartitions(static_cast<int>(gens.size()), static_cast<int>(d));
    const std::size_t idx = whittaker_source_index(static_cast<int>(gens.size()), static_cast<int>(d));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const FockState moved = theta_pbw_action(gens, basis[i], states[d]);
      const Rational val = moved.coefficient(empty);
      if (val != ((i == idx) ? Rational(1) : Rational(0))) v.pairing_ok = false;
    }
    if (d >= 1) {
      FockState stepped = apply_field_mode(gens[static_cast<std::size_t>(top)].state, 1, states[d]);
      stepped *= chain_sign;
      if (!(stepped == states[d - 1])) v.chain_ok = false;
      for (int kappa = 0; kappa <= top; ++kappa) {
        for (int n = 1; n <= static_cast<int>(d); ++n) {
          if (kappa == top && n == 1) continue;
          const FockState killed = apply_field_mode(gens[static_cast<std::size_t>(kappa)].state, n, states[d]);
          if (!killed.is_zero()) v.annihilation_ok = false;
        }
      }
    }
  }
  return v;
}

}  // namespace wfock
