#include "wfock/rmatrix.hpp"

#include <functional>
#include <map>

#include "wfock/ratinterp.hpp"
#include "wfock/walgebra.hpp"

namespace wfock {

namespace {

using Op = std::function<FockState(const FockState&)>;

RationalMatrix operator_matrix(const Op& op, const ColorAlgebra& alg, const ParamPoint& p,
                               int src_degree, int dst_degree) {
  const auto src = enumerate_multipartitions(alg.colors(), src_degree);
  const auto dst = enumerate_multipartitions(alg.colors(), dst_degree);
  std::map<MultiPartition, Eigen::Index> dst_index;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<Eigen::Index>(i);
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(dst.size()),
                                          static_cast<Eigen::Index>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    FockState s(alg, p, Sector::module());
    s.add_term(src[c], Rational(1));
    const FockState img = op(s);
    for (const auto& [key, v] : img.terms()) m(dst_index.at(key), static_cast<Eigen::Index>(c)) = v;
  }
  return m;
}

Op virasoro_op(int color, int n) {
  return [color, n](const FockState& s) { return virasoro_mode(color, n, s); };
}

Op combo_op(const std::vector<int>& combo, int n) {
  return [combo, n](const FockState& s) {
    FockState out(s.algebra(), s.params(), s.sector());
    for (int k = 0; k < static_cast<int>(combo.size()); ++k) {
      if (combo[static_cast<std::size_t>(k)] == 0) continue;
      FockState t = apply_mode(HeisenbergMode{k, n}, s);
      t *= Rational(combo[static_cast<std::size_t>(k)]);
      out += t;
    }
    return out;
  };
}

// Integer combinations spanning the orthogonal complement of color i.
std::vector<std::vector<int>> orthogonal_combos(const RootSystem& rs, int color) {
  std::vector<std::vector<int>> out;
  for (int j = 0; j < rs.rank(); ++j) {
    if (j == color) continue;
    std::vector<int> v(static_cast<std::size_t>(rs.rank()), 0);
    v[static_cast<std::size_t>(j)] = 2;
    v[static_cast<std::size_t>(color)] = -rs.pairing(j, color);
    out.push_back(std::move(v));
  }
  return out;
}

long dim_at(int colors, int degree) {
  return static_cast<long>(enumerate_multipartitions(colors, degree).size());
}

}  // namespace

std::vector<RBlock> rmatrix_blocks(const RootSystem& rs, int color, int dmax, const ParamPoint& p) {
  const ColorAlgebra alg = ColorAlgebra::simple_root(rs);
  const ParamPoint pr = rs.weyl_reflect(color, p);
  const auto orth = orthogonal_combos(rs, color);

  std::vector<RBlock> blocks;
  blocks.push_back(RBlock{color, 0, RationalMatrix::Identity(1, 1)});

  for (int e = 1; e <= dmax; ++e) {
    const Eigen::Index ne = static_cast<Eigen::Index>(dim_at(rs.rank(), e));
    // rows of the linear system: one equation per (constraint, matrix entry)
    std::vector<RationalMatrix> coeff_rows;
    std::vector<RationalVector> rhs_rows;
    auto add_constraints = [&](const Op& op_a, const Op& op_b, int n) {
      // op maps degree e -> e - n (n may be negative)
      if (n > 0) {
        if (e - n < 0) return;
        // X_{e-n} La = Lb X_e
        const RationalMatrix la = operator_matrix(op_a, alg, p, e, e - n);
        const RationalMatrix lb = operator_matrix(op_b, alg, pr, e, e - n);
        const RationalMatrix lhs = blocks[static_cast<std::size_t>(e - n)].matrix * la;
        // rows indexed by (r, c): sum_k lb(r, k) X(k, c) = lhs(r, c)
        const Eigen::Index nr = lb.rows();
        RationalMatrix sys = RationalMatrix::Zero(nr * ne, ne * ne);
        RationalVector rhs = RationalVector::Zero(nr * ne);
        for (Eigen::Index r = 0; r < nr; ++r) {
          for (Eigen::Index c = 0; c < ne; ++c) {
            for (Eigen::Index k = 0; k < ne; ++k) sys(r * ne + c, k * ne + c) = lb(r, k);
            rhs(r * ne + c) = lhs(r, c);
          }
        }
        coeff_rows.push_back(std::move(sys));
        rhs_rows.push_back(std::move(rhs));
      } else {
        const int m = -n;  // raising by m from degree e-m
        if (e - m < 0) return;
        // X_e La = Lb X_{e-m} with La: e-m -> e
        const RationalMatrix la = operator_matrix(op_a, alg, p, e - m, e);
        const RationalMatrix lb = operator_matrix(op_b, alg, pr, e - m, e);
        const RationalMatrix rhs_m = lb * blocks[static_cast<std::size_t>(e - m)].matrix;
        const Eigen::Index ns = la.cols();
        RationalMatrix sys = RationalMatrix::Zero(ne * ns, ne * ne);
        RationalVector rhs = RationalVector::Zero(ne * ns);
        for (Eigen::Index r = 0; r < ne; ++r) {
          for (Eigen::Index c = 0; c < ns; ++c) {
            for (Eigen::Index k = 0; k < ne; ++k) sys(r * ns + c, r * ne + k) = la(k, c);
            rhs(r * ns + c) = rhs_m(r, c);
          }
        }
        coeff_rows.push_back(std::move(sys));
        rhs_rows.push_back(std::move(rhs));
      }
    };

    for (int n : {1, 2}) {
      add_constraints(virasoro_op(color, n), virasoro_op(color, n), n);
      add_constraints(virasoro_op(color, -n), virasoro_op(color, -n), -n);
    }
    for (const auto& v : orth) {
      for (int n = 1; n <= e; ++n) {
        add_constraints(combo_op(v, n), combo_op(v, n), n);
        add_constraints(combo_op(v, -n), combo_op(v, -n), -n);
      }
    }

    Eigen::Index total_rows = 0;
    for (const auto& m : coeff_rows) total_rows += m.rows();
    RationalMatrix sys = RationalMatrix::Zero(total_rows, ne * ne);
    RationalVector rhs = RationalVector::Zero(total_rows);
    Eigen::Index r0 = 0;
    for (std::size_t i = 0; i < coeff_rows.size(); ++i) {
      sys.middleRows(r0, coeff_rows[i].rows()) = coeff_rows[i];
      rhs.segment(r0, rhs_rows[i].size()) = rhs_rows[i];
      r0 += coeff_rows[i].rows();
    }
    auto [ok, x] = try_solve_any(sys, rhs);
    if (!ok || rank_of(sys) != ne * ne)
      throw NonGenericPointError("rmatrix_blocks: intertwiner solution space is not one-dimensional");
    RationalMatrix X(ne, ne);
    for (Eigen::Index r = 0; r < ne; ++r) {
      for (Eigen::Index c = 0; c < ne; ++c) X(r, c) = x(r * ne + c);
    }
    blocks.push_back(RBlock{color, e, std::move(X)});
  }
  return blocks;
}

RBlock rmatrix_block(const RootSystem& rs, int color, int degree, const ParamPoint& p) {
  return rmatrix_blocks(rs, color, degree, p).back();
}

bool unitarity_check(const RootSystem& rs, int color, int dmax, const ParamPoint& p) {
  const auto fwd = rmatrix_blocks(rs, color, dmax, p);
  const auto bwd = rmatrix_blocks(rs, color, dmax, rs.weyl_reflect(color, p));
  for (int e = 0; e <= dmax; ++e) {
    const RationalMatrix prod =
        bwd[static_cast<std::size_t>(e)].matrix * fwd[static_cast<std::size_t>(e)].matrix;
    if (prod != RationalMatrix::Identity(prod.rows(), prod.cols())) return false;
  }
  return true;
}

bool intertwiner_check(const RootSystem& rs, int color, int dmax, int nmax, const ParamPoint& p) {
  const ColorAlgebra alg = ColorAlgebra::simple_root(rs);
  const ParamPoint pr = rs.weyl_reflect(color, p);
  const auto blocks = rmatrix_blocks(rs, color, dmax, p);
  for (int e = 0; e <= dmax; ++e) {
    for (int n = -nmax; n <= nmax; ++n) {
      if (e - n < 0 || e - n > dmax) continue;
      const RationalMatrix la = operator_matrix(virasoro_op(color, n), alg, p, e, e - n);
      const RationalMatrix lb = operator_matrix(virasoro_op(color, n), alg, pr, e, e - n);
      if (blocks[static_cast<std::size_t>(e - n)].matrix * la !=
          lb * blocks[static_cast<std::size_t>(e)].matrix)
        return false;
    }
  }
  return true;
}

bool ybe_check(const RootSystem& rs, int color_i, int color_j, int dmax, const ParamPoint& p) {
  const ParamPoint pj = rs.weyl_reflect(color_j, p);
  const ParamPoint pi = rs.weyl_reflect(color_i, p);
  const ParamPoint pij = rs.weyl_reflect(color_i, pj);
  const ParamPoint pji = rs.weyl_reflect(color_j, pi);
  const auto rj_1 = rmatrix_blocks(rs, color_j, dmax, p);
  const auto ri_2 = rmatrix_blocks(rs, color_i, dmax, pj);
  const auto rj_3 = rmatrix_blocks(rs, color_j, dmax, pij);
  const auto ri_1 = rmatrix_blocks(rs, color_i, dmax, p);
  const auto rj_2 = rmatrix_blocks(rs, color_j, dmax, pi);
  const auto ri_3 = rmatrix_blocks(rs, color_i, dmax, pji);
  for (int e = 0; e <= dmax; ++e) {
    const auto& a = rj_3[static_cast<std::size_t>(e)].matrix;
    const auto& b = ri_2[static_cast<std::size_t>(e)].matrix;
    const auto& c = rj_1[static_cast<std::size_t>(e)].matrix;
    const auto& d = ri_3[static_cast<std::size_t>(e)].matrix;
    const auto& f = rj_2[static_cast<std::size_t>(e)].matrix;
    const auto& g = ri_1[static_cast<std::size_t>(e)].matrix;
    if (RationalMatrix(a * b * c) != RationalMatrix(d * f * g)) return false;
  }
  return true;
}

bool commuting_check(const RootSystem& rs, int color_i, int color_j, int dmax, const ParamPoint& p) {
  if (rs.pairing(color_i, color_j) != 0)
    throw std::invalid_argument("commuting_check: colors are not orthogonal");
  const ParamPoint pj = rs.weyl_reflect(color_j, p);
  const ParamPoint pi = rs.weyl_reflect(color_i, p);
  const auto ri_after = rmatrix_blocks(rs, color_i, dmax, pj);
  const auto rj_first = rmatrix_blocks(rs, color_j, dmax, p);
  const auto rj_after = rmatrix_blocks(rs, color_j, dmax, pi);
  const auto ri_first = rmatrix_blocks(rs, color_i, dmax, p);
  for (int e = 0; e <= dmax; ++e) {
    if (RationalMatrix(ri_after[static_cast<std::size_t>(e)].matrix *
                       rj_first[static_cast<std::size_t>(e)].matrix) !=
        RationalMatrix(rj_after[static_cast<std::size_t>(e)].matrix *
                       ri_first[static_cast<std::size_t>(e)].matrix))
      return false;
  }
  return true;
}

LeadingTermReport leading_term_check(const RootSystem& rs, int color, int dmax,
                                     const ParamPoint& base, int num_degree_bound,
                                     int den_degree_bound) {
  LeadingTermReport rep;
  const int samples_needed = num_degree_bound + den_degree_bound + 2;
  std::vector<std::vector<std::vector<std::vector<RationalSample>>>> samples(
      static_cast<std::size_t>(dmax) + 1);
  bool tail_seen = false;
  int collected = 0;
  for (long nval = 1; collected < samples_needed && nval < 16 * samples_needed; ++nval) {
    ParamPoint p = base;
    p.a[static_cast<std::size_t>(color)] = Rational(nval) * base.a[static_cast<std::size_t>(color)];
    std::vector<RBlock> blocks;
    try {
      blocks = rmatrix_blocks(rs, color, dmax, p);
    } catch (const NonGenericPointError&) {
      continue;
    }
    const Rational x = Rational(1) / Rational(nval);
    for (int e = 0; e <= dmax; ++e) {
      auto& store = samples[static_cast<std::size_t>(e)];
      const RationalMatrix& m = blocks[static_cast<std::size_t>(e)].matrix;
      if (store.empty())
        store.assign(static_cast<std::size_t>(m.rows()),
                     std::vector<std::vector<RationalSample>>(static_cast<std::size_t>(m.cols())));
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          store[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].emplace_back(x, m(r, c));
        }
      }
      if (e >= 1 && !tail_seen) {
        RationalMatrix diff = m + RationalMatrix::Identity(m.rows(), m.cols());
        if (diff != RationalMatrix::Zero(m.rows(), m.cols())) tail_seen = true;
      }
    }
    ++collected;
  }
  if (collected < samples_needed)
    throw NonGenericPointError("leading_term_check: could not collect enough samples");
  rep.finite_tail = tail_seen;
  rep.limit_ok = true;
  // The limit operator is -1 on the reflected oscillator line and +1 on its
  // complement, so a length-k monomial picks up (-1)^k. On the current
  // (degree-one) block that is the stated leading coefficient -1.
  for (int e = 0; e <= dmax; ++e) {
    const auto basis = enumerate_multipartitions(rs.rank(), e);
    const auto& store = samples[static_cast<std::size_t>(e)];
    for (std::size_t r = 0; r < store.size(); ++r) {
      const bool odd = basis[r].component(color).length() % 2 != 0;
      for (std::size_t c = 0; c < store[r].size(); ++c) {
        const Rational lim = limit_at_zero(store[r][c], num_degree_bound, den_degree_bound);
        const Rational expected = (r == c) ? (odd ? Rational(-1) : Rational(1)) : Rational(0);
        if (lim != expected) rep.limit_ok = false;
      }
    }
  }
  return rep;
}

}  // namespace wfock
