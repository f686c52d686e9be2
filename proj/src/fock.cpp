#include "wfock/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wfock {

// ---------------------------------------------------------------------------
// ColorAlgebra
// ---------------------------------------------------------------------------

ColorAlgebra ColorAlgebra::simple_root(const RootSystem& rs) {
  return ColorAlgebra(Basis::SimpleRoot, rs.cartan());
}

ColorAlgebra ColorAlgebra::gl(int gl_rank) {
  if (gl_rank < 1) throw std::invalid_argument("ColorAlgebra::gl: rank must be >= 1");
  return ColorAlgebra(Basis::Gl, Eigen::MatrixXi::Identity(gl_rank, gl_rank));
}

ColorAlgebra ColorAlgebra::diagonal(int framing_rank) {
  if (framing_rank < 1) throw std::invalid_argument("ColorAlgebra::diagonal: rank must be >= 1");
  Eigen::MatrixXi g(1, 1);
  g(0, 0) = framing_rank;
  return ColorAlgebra(Basis::Diagonal, std::move(g));
}

Rational ColorAlgebra::module_zero_mode(int i, const ParamPoint& p) const {
  if (p.rank() != colors()) throw std::invalid_argument("module_zero_mode: parameter rank mismatch");
  const Rational s = p.eps_sum();
  switch (basis_) {
    case Basis::SimpleRoot:
      return p.a[static_cast<std::size_t>(i)] - s;
    case Basis::Gl:
      // successive differences reproduce a^i - (eps1+eps2)
      return p.a[static_cast<std::size_t>(i)] - Rational(colors() - i - 1) * s;
    case Basis::Diagonal:
      return p.a[static_cast<std::size_t>(i)];
  }
  throw std::logic_error("module_zero_mode: unreachable");
}

Rational zero_mode_eigenvalue(const ColorAlgebra& alg, const Sector& sector, int color,
                              const ParamPoint& p) {
  switch (sector.kind) {
    case Sector::Kind::Module:
      return alg.module_zero_mode(color, p);
    case Sector::Kind::Vacuum:
      return Rational(0);
    case Sector::Kind::Marked: {
      Rational g(0);
      for (int k = 0; k < alg.colors(); ++k) {
        if (sector.marker[static_cast<std::size_t>(k)] != 0)
          g += Rational(sector.marker[static_cast<std::size_t>(k)]) * alg.pairing(k, color);
      }
      return -p.eps1 * g;
    }
  }
  throw std::logic_error("zero_mode_eigenvalue: unreachable");
}

// ---------------------------------------------------------------------------
// FockState
// ---------------------------------------------------------------------------

FockState::FockState(const ColorAlgebra& alg, ParamPoint params, Sector sector)
    : alg_(&alg), params_(std::move(params)), sector_(sector) {
  if (sector_.kind == Sector::Kind::Module && params_.rank() != alg_->colors())
    throw std::invalid_argument("FockState: module sector needs one a-coordinate per color");
  if (sector_.kind == Sector::Kind::Marked &&
      static_cast<int>(sector_.marker.size()) != alg_->colors())
    throw std::invalid_argument("FockState: marker arity mismatch");
}

FockState FockState::ground(const ColorAlgebra& alg, ParamPoint params, Sector sector) {
  FockState s(alg, std::move(params), sector);
  s.add_term(MultiPartition(std::vector<Partition>(static_cast<std::size_t>(alg.colors()))),
             Rational(1));
  return s;
}

int FockState::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    (void)c;
    if (d == -1)
      d = key.total_size();
    else if (d != key.total_size())
      return -1;
  }
  return d;
}

Rational FockState::coefficient(const MultiPartition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockState::add_term(const MultiPartition& key, const Rational& c) {
  if (key.colors() != alg_->colors()) throw std::invalid_argument("FockState: key color mismatch");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FockState& FockState::operator+=(const FockState& o) {
  if (!(*alg_ == *o.alg_) || !(params_ == o.params_) || !(sector_ == o.sector_))
    throw std::invalid_argument("FockState: incompatible addition");
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  if (!(*alg_ == *o.alg_) || !(params_ == o.params_) || !(sector_ == o.sector_))
    throw std::invalid_argument("FockState: incompatible subtraction");
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

FockState& FockState::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) {
    (void)key;
    v *= c;
  }
  return *this;
}

bool FockState::operator==(const FockState& o) const {
  return *alg_ == *o.alg_ && params_ == o.params_ && sector_ == o.sector_ && terms_ == o.terms_;
}

std::string FockState::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")*" << key.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Mode action
// ---------------------------------------------------------------------------

namespace {

std::vector<int> with_part_added(const std::vector<int>& parts, int part) {
  std::vector<int> out = parts;
  out.insert(std::upper_bound(out.begin(), out.end(), part, std::greater<int>()), part);
  return out;
}

std::vector<int> with_part_removed(const std::vector<int>& parts, std::size_t idx) {
  std::vector<int> out = parts;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(idx));
  return out;
}

}  // namespace

FockState apply_mode(const HeisenbergMode& m, const FockState& s) {
  const ColorAlgebra& alg = s.algebra();
  if (m.color < 0 || m.color >= alg.colors()) throw std::out_of_range("apply_mode: color out of range");
  FockState out(alg, s.params(), s.sector());
  if (m.mode == 0) {
    const Rational ev = zero_mode_eigenvalue(alg, s.sector(), m.color, s.params());
    for (const auto& [key, c] : s.terms()) out.add_term(key, ev * c);
    return out;
  }
  if (m.mode < 0) {
    const int part = -m.mode;
    for (const auto& [key, c] : s.terms()) {
      std::vector<Partition> comps = key.components();
      comps[static_cast<std::size_t>(m.color)] =
          Partition(with_part_added(comps[static_cast<std::size_t>(m.color)].parts(), part));
      out.add_term(MultiPartition(std::move(comps)), c);
    }
    return out;
  }
  // Annihilation: commute rightward; each matching creation factor
  // contributes -n G(i,j) eps1 eps2, counted with multiplicity, and the
  // ground vector is killed.
  const int n = m.mode;
  const Rational ee = s.params().eps_prod();
  for (const auto& [key, c] : s.terms()) {
    for (int j = 0; j < alg.colors(); ++j) {
      const Rational g = alg.pairing(m.color, j);
      if (g == 0) continue;
      const auto& parts = key.component(j).parts();
      for (std::size_t idx = 0; idx < parts.size(); ++idx) {
        if (parts[idx] != n) continue;
        std::vector<Partition> comps = key.components();
        comps[static_cast<std::size_t>(j)] = Partition(with_part_removed(parts, idx));
        out.add_term(MultiPartition(std::move(comps)), c * Rational(-n) * g * ee);
      }
    }
  }
  return out;
}

FockState apply_word(const std::vector<HeisenbergMode>& word, const FockState& s) {
  FockState cur = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_mode(*it, cur);
  return cur;
}

ThetaMode theta(const HeisenbergMode& m, const ParamPoint& p) {
  ThetaMode t;
  t.flipped = HeisenbergMode{m.color, -m.mode};
  t.scalar = (m.mode == 0) ? Rational(-2) * p.eps_sum() : Rational(0);
  return t;
}

FockState apply_theta_word(const std::vector<HeisenbergMode>& word, const FockState& s) {
  // theta(m_1 ... m_k) = theta(m_k) ... theta(m_1), and each theta(m) acts
  // as -m(i,-n) - 2(eps1+eps2) delta_{n,0}.
  const Rational shift = -2 * s.params().eps_sum();
  FockState cur = s;
  for (const auto& m : word) {
    FockState next = apply_mode(HeisenbergMode{m.color, -m.mode}, cur);
    next *= Rational(-1);
    if (m.mode == 0) {
      FockState sc = cur;
      sc *= shift;
      next += sc;
    }
    cur = next;
  }
  return cur;
}

Rational fock_pairing(const FockState& u, const FockState& v) {
  if (!(u.algebra() == v.algebra())) throw std::invalid_argument("fock_pairing: algebra mismatch");
  if (!(u.sector() == v.sector())) throw std::invalid_argument("fock_pairing: sector mismatch");
  if (u.params().eps1 != v.params().eps1 || u.params().eps2 != v.params().eps2)
    throw std::invalid_argument("fock_pairing: eps mismatch");
  if (u.sector().kind == Sector::Kind::Module && !(u.params() == v.params().negated_a()))
    throw std::invalid_argument("fock_pairing: left factor must sit at the a-negated point");

  const MultiPartition empty{std::vector<Partition>(static_cast<std::size_t>(u.algebra().colors()))};
  Rational total(0);
  for (const auto& [key, c] : u.terms()) {
    // Move theta of the bra monomial onto the ket. The monomial is a product
    // of creation modes, so theta contributes (-1)^length and the reversed
    // raising word; zero modes never occur in basis keys.
    std::vector<HeisenbergMode> raising;
    for (int j = 0; j < key.colors(); ++j) {
      for (int part : key.component(j).parts()) raising.push_back(HeisenbergMode{j, part});
    }
    std::reverse(raising.begin(), raising.end());
    FockState moved = apply_word(raising, v);
    const Rational sign = (key.total_length() % 2 == 0) ? Rational(1) : Rational(-1);
    total += c * sign * moved.coefficient(empty);
  }
  return total;
}

std::vector<FockState> fock_basis(const ColorAlgebra& alg, const ParamPoint& p, const Sector& sector,
                                  int degree) {
  std::vector<FockState> out;
  for (const auto& mp : enumerate_multipartitions(alg.colors(), degree)) {
    FockState s(alg, p, sector);
    s.add_term(mp, Rational(1));
    out.push_back(std::move(s));
  }
  return out;
}

RationalVector fock_coordinates(const FockState& s, int degree) {
  const auto basis = enumerate_multipartitions(s.algebra().colors(), degree);
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(basis.size()));
  std::map<MultiPartition, Eigen::Index> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<Eigen::Index>(i);
  for (const auto& [key, c] : s.terms()) {
    auto it = index.find(key);
    if (it == index.end()) throw std::invalid_argument("fock_coordinates: component outside degree");
    v(it->second) = c;
  }
  return v;
}

}  // namespace wfock
