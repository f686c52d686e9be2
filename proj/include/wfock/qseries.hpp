#pragma once

#include <stdexcept>
#include <vector>

#include "wfock/rational.hpp"

namespace wfock {

/// Truncated power series in the instanton-counting variable, coefficients
/// exact. All ring operations truncate at the common order.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int dmax) : coeffs_(static_cast<std::size_t>(dmax) + 1, Rational(0)) {}
  QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
  }

  int dmax() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  Rational& operator[](int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }

  QSeries operator+(const QSeries& o) const {
    QSeries r(common_dmax(o));
    for (int d = 0; d <= r.dmax(); ++d) r[d] = (*this)[d] + o[d];
    return r;
  }
  QSeries operator-(const QSeries& o) const {
    QSeries r(common_dmax(o));
    for (int d = 0; d <= r.dmax(); ++d) r[d] = (*this)[d] - o[d];
    return r;
  }
  QSeries operator*(const QSeries& o) const {
    QSeries r(common_dmax(o));
    for (int d = 0; d <= r.dmax(); ++d) {
      Rational s(0);
      for (int k = 0; k <= d; ++k) s += (*this)[k] * o[d - k];
      r[d] = s;
    }
    return r;
  }

  /// exp of a series with zero constant term.
  QSeries exp() const {
    if ((*this)[0] != 0) throw std::invalid_argument("QSeries::exp: nonzero constant term");
    QSeries result(dmax());
    result[0] = 1;
    QSeries power(dmax());
    power[0] = 1;
    Rational factorial(1);
    for (int k = 1; k <= dmax(); ++k) {
      power = power * (*this);
      factorial *= k;
      for (int d = 0; d <= dmax(); ++d) result[d] += power[d] / factorial;
    }
    return result;
  }

 private:
  int common_dmax(const QSeries& o) const {
    if (dmax() != o.dmax()) throw std::invalid_argument("QSeries: truncation order mismatch");
    return dmax();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace wfock
