#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "wfock/params.hpp"
#include "wfock/rational.hpp"

namespace wfock {

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Integer partition, parts weakly decreasing. Cells are addressed by
/// 0-based (row, column).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  bool contains(int row, int col) const;

  /// Cells to the right of (row, col) inside this diagram.
  int arm(int row, int col) const;
  /// Cells below (row, col); negative when the cell lies outside the
  /// diagram, which the localization weight formula relies on.
  int leg(int row, int col) const;
  int hook(int row, int col) const { return arm(row, col) + leg(row, col) + 1; }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  /// Canonical order: larger size first, then descending lexicographic on
  /// parts, so (2) before (1,1) before (1) before empty.
  bool operator<(const Partition& o) const;

  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// Tuple of partitions indexed by color; doubles as the PBW index and the
/// Fock basis index.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {}

  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  int colors() const { return static_cast<int>(components_.size()); }
  int total_size() const;
  int total_length() const;

  bool operator==(const MultiPartition& o) const { return components_ == o.components_; }
  bool operator<(const MultiPartition& o) const;

  std::string str() const;

 private:
  std::vector<Partition> components_;
};

std::vector<Partition> enumerate_partitions(int d);

/// All color-tuples of partitions of total size d, in the canonical order
/// shared by every module (descending lexicographic, first color most
/// significant). No duplicates.
std::vector<MultiPartition> enumerate_multipartitions(int colors, int d);

/// Number of partitions of d.
long partition_count(int d);

// ---------------------------------------------------------------------------
// Root systems
// ---------------------------------------------------------------------------

enum class RootSystemKind { A, D, E6, E7, E8 };

/// Simply-laced root-system constants in the (alpha, alpha) = 2
/// normalization. Type A is the primary citizen; D and E are Cartan-table
/// plug-ins sharing all code paths.
class RootSystem {
 public:
  static RootSystem type_a(int rank);
  static RootSystem type_d(int rank);
  static RootSystem type_e(int rank);  // rank 6, 7 or 8

  RootSystemKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  int pairing(int i, int j) const { return cartan_(i, j); }
  const std::vector<int>& exponents() const { return exponents_; }
  int dual_coxeter() const { return dual_coxeter_; }
  /// Conformal degree of the kappa-th generator (0-based kappa).
  int generator_degree(int kappa) const { return exponents_.at(static_cast<std::size_t>(kappa)) + 1; }

  /// Simple reflection s_i on the a-coordinates: a^j -> a^j - C_ji a^i.
  ParamPoint weyl_reflect(int i, const ParamPoint& p) const;

  // Type A coordinate change between simple-root coordinates a^i and
  // gl-style coordinates a_1..a_{rank+1} with a^i = a_i - a_{i+1} and
  // sum a_i = 0.
  int gl_rank() const;
  std::vector<Rational> gl_from_simple(const std::vector<Rational>& a_simple) const;
  std::vector<Rational> simple_from_gl(const std::vector<Rational>& a_gl) const;

 private:
  RootSystem(RootSystemKind kind, int rank, Eigen::MatrixXi cartan, std::vector<int> exponents,
             int dual_coxeter);
  RootSystemKind kind_;
  int rank_;
  Eigen::MatrixXi cartan_;
  std::vector<int> exponents_;
  int dual_coxeter_;
};

}  // namespace wfock
