#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "wfock/rational.hpp"

namespace wfock {

/// Small dense-exponent multivariate polynomial, just enough for invariant
/// polynomials of rank <= 3 and their derivatives.
class MPoly {
 public:
  explicit MPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(std::vector<int> exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("MPoly: exponent arity");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(std::move(exps), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        std::vector<int> e = e1;
        for (int i = 0; i < nvars_; ++i) e[static_cast<std::size_t>(i)] += e2[static_cast<std::size_t>(i)];
        r.add_term(std::move(e), c1 * c2);
      }
    }
    return r;
  }
  MPoly operator*(const Rational& c) const {
    MPoly r(nvars_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
  }

  MPoly derivative(int var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      const int k = e[static_cast<std::size_t>(var)];
      if (k == 0) continue;
      std::vector<int> d = e;
      --d[static_cast<std::size_t>(var)];
      r.add_term(std::move(d), c * k);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("MPoly::evaluate: arity");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational m = c;
      for (int i = 0; i < nvars_; ++i) {
        for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) m *= x[static_cast<std::size_t>(i)];
      }
      total += m;
    }
    return total;
  }

  static MPoly constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static MPoly variable(int nvars, int i) {
    MPoly p(nvars);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
  }

  /// Elementary symmetric polynomial e_p in nvars variables.
  static MPoly elementary_symmetric(int nvars, int p);

  /// Substitute variable i of f by the linear form rows[i] . y where y has
  /// out_nvars variables.
  static MPoly compose_linear(const MPoly& f, const std::vector<std::vector<Rational>>& rows,
                              int out_nvars);

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

inline MPoly MPoly::elementary_symmetric(int nvars, int p) {
  MPoly r(nvars);
  if (p == 0) return constant(nvars, Rational(1));
  std::vector<int> idx(static_cast<std::size_t>(p));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == p) {
      std::vector<int> e(static_cast<std::size_t>(nvars), 0);
      for (int k : idx) e[static_cast<std::size_t>(k)] = 1;
      r.add_term(std::move(e), Rational(1));
      return;
    }
    for (int i = start; i < nvars; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return r;
}

inline MPoly MPoly::compose_linear(const MPoly& f, const std::vector<std::vector<Rational>>& rows,
                                   int out_nvars) {
  MPoly result(out_nvars);
  for (const auto& [e, c] : f.terms()) {
    MPoly m = constant(out_nvars, c);
    for (int i = 0; i < f.nvars(); ++i) {
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) {
        MPoly lin(out_nvars);
        for (int j = 0; j < out_nvars; ++j) {
          const Rational& coef = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (coef != 0) lin = lin + variable(out_nvars, j) * coef;
        }
        m = m * lin;
      }
    }
    result = result + m;
  }
  return result;
}

}  // namespace wfock
