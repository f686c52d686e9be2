#pragma once

#include <random>

#include "wfock/fock.hpp"
#include "wfock/params.hpp"
#include "wfock/rootdata.hpp"

namespace wfock::testing {

inline Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = 1 + static_cast<long>(rng() % 7);
  return frac(num == 0 ? 1 : num, den);
}

/// Deterministic dense state of the given degree with small random
/// coefficients.
inline FockState random_state(const ColorAlgebra& alg, const ParamPoint& p, const Sector& sector,
                              int degree, std::mt19937_64& rng) {
  FockState s(alg, p, sector);
  for (const auto& key : enumerate_multipartitions(alg.colors(), degree)) {
    s.add_term(key, random_rational(rng));
  }
  return s;
}

inline ParamPoint small_point(int rank) {
  // fixed generic-looking rationals, away from small resonances
  ParamPoint p;
  p.eps1 = frac(3, 7);
  p.eps2 = frac(-5, 11);
  const long nums[] = {13, -17, 19};
  for (int i = 0; i < rank; ++i) p.a.push_back(frac(nums[i % 3] + 4 * i, 6));
  return p;
}

}  // namespace wfock::testing
