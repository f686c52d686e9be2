#include "wfock/params.hpp"

namespace wfock {

namespace {

// Raw engine output only; std distributions are not bit-portable.
long draw_in(std::mt19937_64& rng, long lo, long hi) {
  const unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

Rational draw_rational(std::mt19937_64& rng, long denominator_bound) {
  const long num = draw_in(rng, 1, 6 * denominator_bound);
  const long den = draw_in(rng, 1, denominator_bound);
  const bool neg = (rng() & 1u) != 0;
  Rational r = frac(num, den);
  return neg ? -r : r;
}

}  // namespace

ParamPoint sample_params(unsigned long long seed, int rank, long denominator_bound,
                         const std::vector<GenericityConstraint>& avoid) {
  if (rank < 0) throw std::invalid_argument("sample_params: negative rank");
  if (denominator_bound < 2) throw std::invalid_argument("sample_params: denominator_bound must be >= 2");
  std::mt19937_64 rng(seed);
  constexpr int kRetryBudget = 256;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    ParamPoint p;
    p.eps1 = draw_rational(rng, denominator_bound);
    p.eps2 = draw_rational(rng, denominator_bound);
    p.a.resize(static_cast<std::size_t>(rank));
    for (auto& x : p.a) x = draw_rational(rng, denominator_bound);
    if (p.eps1 == 0 || p.eps2 == 0) continue;
    bool ok = true;
    for (const auto& c : avoid) {
      if (c(p) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  throw NonGenericPointError("sample_params: retry budget exhausted (over-constrained avoid set?)");
}

std::vector<GenericityConstraint> resonance_constraints(int rank, int window) {
  std::vector<GenericityConstraint> cs;
  for (int i = 0; i < rank; ++i) {
    for (int m = -window; m <= window; ++m) {
      for (int n = -window; n <= window; ++n) {
        cs.push_back([i, m, n](const ParamPoint& p) {
          return p.a[static_cast<std::size_t>(i)] + Rational(m) * p.eps1 + Rational(n) * p.eps2;
        });
      }
    }
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      cs.push_back([i, j](const ParamPoint& p) {
        return p.a[static_cast<std::size_t>(i)] - p.a[static_cast<std::size_t>(j)];
      });
      cs.push_back([i, j](const ParamPoint& p) {
        return p.a[static_cast<std::size_t>(i)] + p.a[static_cast<std::size_t>(j)];
      });
    }
  }
  return cs;
}

}  // namespace wfock
