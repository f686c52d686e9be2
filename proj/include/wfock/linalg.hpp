#pragma once

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wfock/rational.hpp"

namespace wfock {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Raised by solve_linear on a singular matrix; carries a nonzero kernel
/// vector as the certificate.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(RationalVector witness)
      : std::runtime_error("singular matrix"), kernel_witness(std::move(witness)) {}
  RationalVector kernel_witness;
};

namespace detail {

// Row-reduce in place. Pivot choice is the first nonzero entry in column
// order, which is deterministic and exact. Returns the pivot column of each
// pivot row.
inline std::vector<Eigen::Index> rref(RationalMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    m.row(row) /= m(row, col);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col) != 0) m.row(r) -= m(r, col) * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Columns span the kernel of m. Free columns of the reduced form give one
/// basis vector each, so the result has full column rank.
inline RationalMatrix kernel_basis_of(const RationalMatrix& m) {
  RationalMatrix r = m;
  const std::vector<Eigen::Index> pivots = detail::rref(r);
  std::vector<Eigen::Index> free_cols;
  {
    std::size_t pi = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  RationalMatrix basis = RationalMatrix::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], static_cast<Eigen::Index>(k)) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis(pivots[i], static_cast<Eigen::Index>(k)) = -r(static_cast<Eigen::Index>(i), free_cols[k]);
    }
  }
  return basis;
}

inline Eigen::Index rank_of(const RationalMatrix& m) {
  RationalMatrix r = m;
  return static_cast<Eigen::Index>(detail::rref(r).size());
}

/// Exact solve of a square system. The residual of the returned vector is
/// identically zero; a singular matrix raises SingularMatrixError with a
/// kernel witness.
inline RationalVector solve_linear(const RationalMatrix& m, const RationalVector& rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_linear: matrix not square");
  if (m.rows() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
  const Eigen::Index n = m.rows();
  RationalMatrix aug(n, n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = rhs;
  const std::vector<Eigen::Index> pivots = detail::rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (!pivots.empty() && pivots.back() == n)) {
    RationalMatrix k = kernel_basis_of(m);
    if (k.cols() == 0) throw std::logic_error("solve_linear: inconsistent rank bookkeeping");
    throw SingularMatrixError(k.col(0));
  }
  return aug.col(n);
}

/// Solve m x = rhs for a (possibly rectangular) consistent system; returns
/// one solution, or nothing when inconsistent.
inline std::pair<bool, RationalVector> try_solve_any(const RationalMatrix& m, const RationalVector& rhs) {
  RationalMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = rhs;
  const std::vector<Eigen::Index> pivots = detail::rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return {false, RationalVector()};
  RationalVector x = RationalVector::Zero(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x(pivots[i]) = aug(static_cast<Eigen::Index>(i), m.cols());
  }
  return {true, x};
}

inline Rational determinant_of(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant_of: matrix not square");
  RationalMatrix a = m;
  const Eigen::Index n = a.rows();
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) return Rational(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) != 0) a.row(r) -= (a(r, col) / a(col, col)) * a.row(col);
    }
  }
  return det;
}

}  // namespace wfock
