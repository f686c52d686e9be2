#include "wfock/nekrasov.hpp"

#include <stdexcept>

#include "wfock/fock.hpp"
#include "wfock/linalg.hpp"
#include "wfock/verma.hpp"
#include "wfock/walgebra.hpp"

namespace wfock {

int FixedPoint::total_size() const {
  int s = 0;
  for (const auto& d : diagrams) s += d.size();
  return s;
}

std::vector<FixedPoint> enumerate_fixed_points(int r, int d) {
  std::vector<FixedPoint> out;
  for (const auto& mp : enumerate_multipartitions(r, d)) {
    out.push_back(FixedPoint{mp.components()});
  }
  return out;
}

Rational LocalWeight::evaluate(const ParamPoint& p) const {
  if (static_cast<int>(framing.size()) != p.rank())
    throw std::invalid_argument("LocalWeight::evaluate: framing arity mismatch");
  Rational v = Rational(c1) * p.eps1 + Rational(c2) * p.eps2;
  for (std::size_t i = 0; i < framing.size(); ++i) {
    if (framing[i] != 0) v += Rational(framing[i]) * p.a[i];
  }
  return v;
}

std::vector<LocalWeight> tangent_weights(const FixedPoint& fp) {
  const int r = static_cast<int>(fp.diagrams.size());
  std::vector<LocalWeight> out;
  out.reserve(static_cast<std::size_t>(2 * r * fp.total_size()));
  for (int alpha = 0; alpha < r; ++alpha) {
    const Partition& la = fp.diagrams[static_cast<std::size_t>(alpha)];
    for (int beta = 0; beta < r; ++beta) {
      const Partition& lb = fp.diagrams[static_cast<std::size_t>(beta)];
      for (int row = 0; row < la.length(); ++row) {
        for (int col = 0; col < la.parts()[static_cast<std::size_t>(row)]; ++col) {
          const int arm_a = la.arm(row, col);
          const int leg_b = lb.leg(row, col);
          LocalWeight w1;
          w1.framing.assign(static_cast<std::size_t>(r), 0);
          w1.framing[static_cast<std::size_t>(beta)] += 1;
          w1.framing[static_cast<std::size_t>(alpha)] -= 1;
          w1.c1 = -leg_b;
          w1.c2 = arm_a + 1;
          LocalWeight w2;
          w2.framing.assign(static_cast<std::size_t>(r), 0);
          w2.framing[static_cast<std::size_t>(alpha)] += 1;
          w2.framing[static_cast<std::size_t>(beta)] -= 1;
          w2.c1 = leg_b + 1;
          w2.c2 = -arm_a;
          out.push_back(std::move(w1));
          out.push_back(std::move(w2));
        }
      }
    }
  }
  return out;
}

QSeries z_series(int r, int dmax, const ParamPoint& p) {
  if (p.rank() != r) throw std::invalid_argument("z_series: need r framing coordinates");
  QSeries z(dmax);
  z[0] = 1;
  for (int d = 1; d <= dmax; ++d) {
    Rational sum(0);
    for (const auto& fp : enumerate_fixed_points(r, d)) {
      Rational prod(1);
      for (const auto& w : tangent_weights(fp)) {
        const Rational v = w.evaluate(p);
        if (v == 0) throw NonGenericPointError("z_series: vanishing tangent weight");
        prod *= v;
      }
      sum += Rational(1) / prod;
    }
    z[d] = sum;
  }
  return z;
}

QSeries heis_whittaker_series(int r, int dmax, const ParamPoint& p) {
  const ColorAlgebra diag = ColorAlgebra::diagonal(r);
  ParamPoint q;
  q.eps1 = p.eps1;
  q.eps2 = p.eps2;
  q.a = {Rational(0)};
  QSeries h(dmax);
  h[0] = 1;
  FockState prev = FockState::ground(diag, q, Sector::vacuum());
  for (int d = 1; d <= dmax; ++d) {
    // coherent chain: solve mode_n h^d = delta_{n,1} h^{d-1} on the degree-d
    // coefficients, then pair
    const auto basis = enumerate_multipartitions(1, d);
    const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
    Eigen::Index rows = 0;
    std::vector<std::pair<int, RationalVector>> conditions;
    for (int n = 1; n <= d; ++n) {
      const auto target = enumerate_multipartitions(1, d - n);
      rows += static_cast<Eigen::Index>(target.size());
    }
    RationalMatrix sys = RationalMatrix::Zero(rows, dim);
    RationalVector rhs = RationalVector::Zero(rows);
    Eigen::Index r0 = 0;
    for (int n = 1; n <= d; ++n) {
      const auto target = enumerate_multipartitions(1, d - n);
      std::map<MultiPartition, Eigen::Index> tindex;
      for (std::size_t i = 0; i < target.size(); ++i) tindex[target[i]] = static_cast<Eigen::Index>(i);
      for (Eigen::Index c = 0; c < dim; ++c) {
        FockState s(diag, q, Sector::vacuum());
        s.add_term(basis[static_cast<std::size_t>(c)], Rational(1));
        const FockState img = apply_mode(HeisenbergMode{0, n}, s);
        for (const auto& [key, v] : img.terms()) sys(r0 + tindex.at(key), c) = v;
      }
      if (n == 1) {
        for (const auto& [key, v] : prev.terms()) rhs(r0 + tindex.at(key)) = v;
      }
      r0 += static_cast<Eigen::Index>(target.size());
    }
    auto [ok, x] = try_solve_any(sys, rhs);
    if (!ok) throw std::logic_error("heis_whittaker_series: chain system inconsistent");
    FockState hd(diag, q, Sector::vacuum());
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (x(i) != 0) hd.add_term(basis[static_cast<std::size_t>(i)], x(i));
    }
    h[d] = fock_pairing(hd, hd);
    prev = hd;
  }
  return h;
}

AgtReport agt_compare(int dmax, const ParamPoint& p_gl) {
  if (p_gl.rank() != 2) throw std::invalid_argument("agt_compare: rank-2 framing expected");
  AgtReport rep;
  rep.params = p_gl;
  rep.z = z_series(2, dmax, p_gl);
  rep.heis = heis_whittaker_series(2, dmax, p_gl);

  const RootSystem a1 = RootSystem::type_a(1);
  ParamPoint sl;
  sl.eps1 = p_gl.eps1;
  sl.eps2 = p_gl.eps2;
  sl.a = {p_gl.a[0] - p_gl.a[1]};
  const WContext ctx = WContext::simple_root(a1);
  const auto gens = extract_w_generators(ctx, sl);
  const auto ws = whittaker(gens, dmax, sl);
  for (const auto& w : ws) rep.verma_norms.push_back(w.norm);

  rep.ratios.assign(static_cast<std::size_t>(dmax) + 1, Rational(0));
  rep.ratios[0] = 1;
  for (int d = 1; d <= dmax; ++d) {
    const Rational& v = rep.verma_norms[static_cast<std::size_t>(d)];
    if (v == 0) throw NonGenericPointError("agt_compare: vanishing Whittaker norm");
    rep.ratios[static_cast<std::size_t>(d)] = rep.z[d] / v;
  }
  rep.power_law = true;
  if (dmax >= 1) {
    Rational power(1);
    for (int d = 1; d <= dmax; ++d) {
      power *= rep.ratios[1];
      if (rep.ratios[static_cast<std::size_t>(d)] != power) rep.power_law = false;
    }
  }
  return rep;
}

AgtReport agt_compare_gl(int r, int dmax, const ParamPoint& p_gl) {
  if (p_gl.rank() != r) throw std::invalid_argument("agt_compare_gl: framing arity mismatch");
  AgtReport rep;
  rep.params = p_gl;
  rep.z = z_series(r, dmax, p_gl);
  rep.heis = heis_whittaker_series(r, dmax, p_gl);
  const WContext ctx = WContext::gl(r);
  const auto gens = extract_w_generators(ctx, p_gl);
  const auto ws = whittaker(gens, dmax, p_gl);
  for (const auto& w : ws) rep.verma_norms.push_back(w.norm);
  rep.ratios.assign(static_cast<std::size_t>(dmax) + 1, Rational(0));
  rep.ratios[0] = 1;
  for (int d = 1; d <= dmax; ++d) {
    const Rational& v = rep.verma_norms[static_cast<std::size_t>(d)];
    if (v == 0) throw NonGenericPointError("agt_compare_gl: vanishing Whittaker norm");
    rep.ratios[static_cast<std::size_t>(d)] = rep.z[d] / v;
  }
  rep.power_law = true;
  Rational power(1);
  for (int d = 1; d <= dmax; ++d) {
    power *= rep.ratios[1];
    if (rep.ratios[static_cast<std::size_t>(d)] != power) rep.power_law = false;
  }
  return rep;
}

MonomialCheck agt_ratio_monomial(const ParamPoint& base) {
  MonomialCheck out;
  auto rho1 = [](const ParamPoint& p) { return agt_compare(1, p).ratios[1]; };
  const Rational r0 = rho1(base);
  if (r0 == 0) return out;

  ParamPoint p1 = base;
  p1.eps1 *= 2;
  ParamPoint p2 = base;
  p2.eps2 *= 2;
  ParamPoint p3 = base;
  p3.a[0] += 1;
  p3.a[1] -= 2;

  auto integer_log2 = [](Rational ratio, long& exp_out) {
    exp_out = 0;
    while (ratio != 1 && denominator(ratio) == 1 && numerator(ratio) % 2 == 0) {
      ratio /= 2;
      ++exp_out;
    }
    while (ratio != 1 && numerator(ratio) == 1 && denominator(ratio) % 2 == 0) {
      ratio *= 2;
      --exp_out;
    }
    return ratio == 1;
  };

  long m = 0, n = 0;
  if (!integer_log2(rho1(p1) / r0, m)) return out;
  if (!integer_log2(rho1(p2) / r0, n)) return out;
  if (rho1(p3) != r0) return out;  // residual framing dependence

  Rational mono(1);
  for (long t = 0; t < m; ++t) mono *= base.eps1;
  for (long t = 0; t > m; --t) mono /= base.eps1;
  for (long t = 0; t < n; ++t) mono *= base.eps2;
  for (long t = 0; t > n; --t) mono /= base.eps2;
  const Rational sign = r0 / mono;
  if (sign != 1 && sign != -1) return out;
  out.is_monomial = true;
  out.sign = (sign == 1) ? 1 : -1;
  out.exp_eps1 = m;
  out.exp_eps2 = n;
  return out;
}

}  // namespace wfock
