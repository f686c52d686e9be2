#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "wfock/linalg.hpp"
#include "wfock/params.hpp"
#include "wfock/rational.hpp"
#include "wfock/rootdata.hpp"

namespace wfock {

/// Heisenberg color data: the symmetric pairing G of the color space and the
/// zero-mode convention of each sector. Oscillator modes satisfy
///
///   [m_a(i), m_b(j)] = -a delta_{a,-b} G(i,j) eps1 eps2.
///
/// Three instantiations cover everything here: simple-root colors (G is the
/// Cartan matrix), gl colors for type A (G = identity) and the single
/// diagonal color of a rank-r framing (G = (r)).
class ColorAlgebra {
 public:
  enum class Basis { SimpleRoot, Gl, Diagonal };

  static ColorAlgebra simple_root(const RootSystem& rs);
  static ColorAlgebra gl(int gl_rank);
  static ColorAlgebra diagonal(int framing_rank);

  Basis basis() const { return basis_; }
  int colors() const { return static_cast<int>(pairing_.rows()); }
  Rational pairing(int i, int j) const { return Rational(pairing_(i, j)); }

  /// Zero-mode eigenvalue of color i in the highest-weight sector at p.
  /// Simple-root colors carry a^i - (eps1+eps2); gl colors carry
  /// a_i - (r-i-1)(eps1+eps2), which reproduces the simple-root convention
  /// under a^i = a_i - a_{i+1}.
  Rational module_zero_mode(int i, const ParamPoint& p) const;

  bool operator==(const ColorAlgebra& o) const {
    return basis_ == o.basis_ && pairing_ == o.pairing_;
  }

 private:
  ColorAlgebra(Basis basis, Eigen::MatrixXi pairing) : basis_(basis), pairing_(std::move(pairing)) {}
  Basis basis_;
  Eigen::MatrixXi pairing_;
};

/// Which highest-weight vector the oscillators act on. The marked sector is
/// the image of a screening charge with color-combination vector v: a vacuum
/// shifted so the zero mode of color j reads -eps1 sum_k v_k G(k, j).
struct Sector {
  enum class Kind { Module, Vacuum, Marked };
  Kind kind = Kind::Vacuum;
  std::vector<int> marker;  // screening combination, Marked only

  static Sector module() { return {Kind::Module, {}}; }
  static Sector vacuum() { return {Kind::Vacuum, {}}; }
  static Sector marked(std::vector<int> combo) { return {Kind::Marked, std::move(combo)}; }
  /// Marker for the single simple-root color i.
  static Sector marked_color(int i, int colors) {
    std::vector<int> v(static_cast<std::size_t>(colors), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return marked(std::move(v));
  }

  bool operator==(const Sector& o) const { return kind == o.kind && marker == o.marker; }
};

/// One oscillator: color index plus mode number (negative = creation,
/// positive = annihilation, zero = sector eigenvalue).
struct HeisenbergMode {
  int color;
  int mode;
};

/// A finite exact linear combination of oscillator monomials applied to a
/// highest-weight vector. Basis keys are multipartitions over the colors;
/// a key's component j lists the creation modes of color j, so the basis
/// vector is the product of modes m(j, -part) applied to the sector's ground
/// vector, in any order (creations commute).
class FockState {
 public:
  FockState(const ColorAlgebra& alg, ParamPoint params, Sector sector);

  /// Ground vector of the sector, coefficient one.
  static FockState ground(const ColorAlgebra& alg, ParamPoint params, Sector sector);

  const ColorAlgebra& algebra() const { return *alg_; }
  const ParamPoint& params() const { return params_; }
  const Sector& sector() const { return sector_; }
  const std::map<MultiPartition, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// All stored keys have this total size; -1 when zero or mixed.
  int degree() const;

  Rational coefficient(const MultiPartition& key) const;
  void add_term(const MultiPartition& key, const Rational& c);

  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Rational& c);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Rational& c, FockState s) { return s *= c; }

  bool operator==(const FockState& o) const;

  std::string str() const;

 private:
  const ColorAlgebra* alg_;
  ParamPoint params_;
  Sector sector_;
  std::map<MultiPartition, Rational> terms_;
};

/// Zero-mode eigenvalue of color i in the given sector.
Rational zero_mode_eigenvalue(const ColorAlgebra& alg, const Sector& sector, int color,
                              const ParamPoint& p);

/// Apply one oscillator mode. Creation appends a part, annihilation
/// contracts through the commutator and kills the ground vector, the zero
/// mode scales by the sector eigenvalue.
FockState apply_mode(const HeisenbergMode& m, const FockState& s);

/// Apply a word of modes, rightmost factor first (operator composition).
FockState apply_word(const std::vector<HeisenbergMode>& word, const FockState& s);

/// The contragredient transpose of a mode: theta(m(i,n)) is -m(i,-n) plus
/// the scalar -2(eps1+eps2) when n = 0. Extends anti-multiplicatively to
/// words; fock_pairing and the adjointness tests consume it through
/// apply_theta_word.
struct ThetaMode {
  HeisenbergMode flipped;  // this mode enters with coefficient -1
  Rational scalar;         // additive scalar part, nonzero only for n = 0
};
ThetaMode theta(const HeisenbergMode& m, const ParamPoint& p);

/// theta of a whole word applied to a state: theta(m_1 ... m_k) acting on s,
/// expanding every scalar branch.
FockState apply_theta_word(const std::vector<HeisenbergMode>& word, const FockState& s);

/// Kac-Shapovalov pairing <u, v> normalized by <ground|ground> = 1 and the
/// adjointness <u, m v> = <theta(m) u, v>. u must live at the a-negated
/// parameter point of v (same eps, same algebra, compatible sector).
Rational fock_pairing(const FockState& u, const FockState& v);

/// Degree-d basis states of the sector, in canonical multipartition order.
std::vector<FockState> fock_basis(const ColorAlgebra& alg, const ParamPoint& p, const Sector& sector,
                                  int degree);

/// Coordinates of s in the canonical degree-d basis; throws when s has a
/// component outside that degree.
RationalVector fock_coordinates(const FockState& s, int degree);

}  // namespace wfock
