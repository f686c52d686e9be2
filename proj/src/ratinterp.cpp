#include "wfock/ratinterp.hpp"

#include <set>

#include "wfock/linalg.hpp"

namespace wfock {

namespace {

using Poly = std::vector<Rational>;  // coefficient list, low degree first

Rational eval(const Poly& p, const Rational& t) {
  Rational v(0);
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

// Euclidean remainder; divisor leading coefficient nonzero.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !is_zero(a)) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    while (a.size() > 1 && a.back() == 0) a.pop_back();
  }
  if (a.empty()) a = {Rational(0)};
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // monic normalization
  for (auto& c : a) c /= a.back();
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !is_zero(a) && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    while (a.size() > 1 && a.back() == 0) a.pop_back();
  }
  return q;
}

}  // namespace

Rational limit_at_zero(const std::vector<RationalSample>& samples, int num_degree_bound,
                       int den_degree_bound) {
  if (num_degree_bound < 0 || den_degree_bound < 0)
    throw std::invalid_argument("limit_at_zero: negative degree bound");
  const int n_used = num_degree_bound + den_degree_bound + 1;
  if (static_cast<int>(samples.size()) < n_used + 1)
    throw std::invalid_argument("limit_at_zero: need at least num+den+2 samples");
  {
    std::set<Rational> seen;
    for (const auto& [t, f] : samples) {
      (void)f;
      if (t == 0) throw std::invalid_argument("limit_at_zero: sample at t = 0");
      if (!seen.insert(t).second) throw std::invalid_argument("limit_at_zero: repeated sample point");
    }
  }

  // Homogeneous Cauchy system P(t_i) - f_i Q(t_i) = 0 in the stacked
  // coefficients of P and Q. Any kernel vector with Q not identically zero
  // represents the same rational function, since two of them cross-multiply
  // to a polynomial of degree <= nb+db vanishing at nb+db+1 points.
  const int cols = num_degree_bound + den_degree_bound + 2;
  RationalMatrix sys = RationalMatrix::Zero(n_used, cols);
  for (int i = 0; i < n_used; ++i) {
    const auto& [t, f] = samples[static_cast<std::size_t>(i)];
    Rational tp(1);
    for (int j = 0; j <= num_degree_bound; ++j) {
      sys(i, j) = tp;
      tp *= t;
    }
    tp = 1;
    for (int j = 0; j <= den_degree_bound; ++j) {
      sys(i, num_degree_bound + 1 + j) = -f * tp;
      tp *= t;
    }
  }
  const RationalMatrix kernel = kernel_basis_of(sys);
  Eigen::Index pick = -1;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    for (int j = 0; j <= den_degree_bound; ++j) {
      if (kernel(num_degree_bound + 1 + j, c) != 0) {
        pick = c;
        break;
      }
    }
    if (pick >= 0) break;
  }
  if (pick < 0) throw DegreeBoundError("limit_at_zero: interpolation system degenerate, degree bounds too small");

  Poly num(static_cast<std::size_t>(num_degree_bound) + 1);
  Poly den(static_cast<std::size_t>(den_degree_bound) + 1);
  for (int j = 0; j <= num_degree_bound; ++j) num[static_cast<std::size_t>(j)] = kernel(j, pick);
  for (int j = 0; j <= den_degree_bound; ++j)
    den[static_cast<std::size_t>(j)] = kernel(num_degree_bound + 1 + j, pick);
  trim(num);
  trim(den);
  if (!is_zero(num)) {
    const Poly g = poly_gcd(num, den);
    if (g.size() > 1) {
      num = poly_div_exact(num, g);
      den = poly_div_exact(den, g);
    }
  }

  // Held-out validation over every sample, including the ones used to build
  // the system (a shared root could have hidden an inconsistency there).
  for (const auto& [t, f] : samples) {
    const Rational qv = eval(den, t);
    if (qv == 0 || eval(num, t) != f * qv)
      throw DegreeBoundError("limit_at_zero: held-out sample mismatch, degree bounds too small");
  }

  const Rational q0 = eval(den, Rational(0));
  if (q0 == 0) throw PoleAtZeroError();
  return eval(num, Rational(0)) / q0;
}

}  // namespace wfock
