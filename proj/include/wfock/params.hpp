#pragma once

#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfock/rational.hpp"

namespace wfock {

/// An exact evaluation point for the equivariant parameters: the two torus
/// weights and the rank-many Coulomb coordinates a^1..a^l (simple-root
/// coordinates unless a caller says otherwise).
struct ParamPoint {
  Rational eps1;
  Rational eps2;
  std::vector<Rational> a;

  int rank() const { return static_cast<int>(a.size()); }
  Rational eps_sum() const { return eps1 + eps2; }
  Rational eps_prod() const { return eps1 * eps2; }
  /// Value of k + h_dual in the standard level convention.
  Rational level_shift() const { return -eps2 / eps1; }

  ParamPoint with_a(std::vector<Rational> na) const {
    ParamPoint p = *this;
    p.a = std::move(na);
    return p;
  }
  ParamPoint negated_a() const {
    ParamPoint p = *this;
    for (auto& x : p.a) x = -x;
    return p;
  }
  ParamPoint swapped_eps() const {
    ParamPoint p = *this;
    std::swap(p.eps1, p.eps2);
    return p;
  }

  bool operator==(const ParamPoint& o) const { return eps1 == o.eps1 && eps2 == o.eps2 && a == o.a; }
};

/// A polynomial constraint the sampled point must keep nonzero.
using GenericityConstraint = std::function<Rational(const ParamPoint&)>;

class NonGenericPointError : public std::runtime_error {
 public:
  explicit NonGenericPointError(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic generic-point sampler. Retries with fresh draws until eps1,
/// eps2 and every avoid-constraint evaluate nonzero; a fixed retry budget
/// guards against unsatisfiable constraint sets.
ParamPoint sample_params(unsigned long long seed, int rank, long denominator_bound,
                         const std::vector<GenericityConstraint>& avoid = {});

/// Constraints every module needs before trusting a point: pairwise a-sums
/// and differences, and the resonance values a^i + m eps1 + n eps2 for
/// |m|, |n| <= window.
std::vector<GenericityConstraint> resonance_constraints(int rank, int window);

}  // namespace wfock
