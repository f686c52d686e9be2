#include "wfock/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wfock {

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(int row, int col) const {
  return row >= 0 && row < length() && col >= 0 && col < parts_[static_cast<std::size_t>(row)];
}

int Partition::arm(int row, int col) const {
  if (!contains(row, col)) throw std::out_of_range("Partition::arm: cell outside diagram");
  return parts_[static_cast<std::size_t>(row)] - col - 1;
}

int Partition::leg(int row, int col) const {
  // column height minus row minus one; meaningful (and possibly negative)
  // for cells of another diagram as well
  int height = 0;
  for (int r = 0; r < length(); ++r) {
    if (parts_[static_cast<std::size_t>(r)] > col)
      ++height;
    else
      break;
  }
  return height - row - 1;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int r = 0; r < length(); ++r) {
    for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c) ++conj[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(conj));
}

bool Partition::operator<(const Partition& o) const {
  // Mirrors the enumeration: larger size first, then descending
  // lexicographic on parts, longer run first on ties.
  if (size() != o.size()) return size() > o.size();
  const std::size_t n = std::min(parts_.size(), o.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (parts_[i] != o.parts_[i]) return parts_[i] > o.parts_[i];
  }
  return parts_.size() > o.parts_.size();
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

int MultiPartition::total_size() const {
  int s = 0;
  for (const auto& p : components_) s += p.size();
  return s;
}

int MultiPartition::total_length() const {
  int s = 0;
  for (const auto& p : components_) s += p.length();
  return s;
}

bool MultiPartition::operator<(const MultiPartition& o) const {
  return std::lexicographical_compare(components_.begin(), components_.end(), o.components_.begin(),
                                      o.components_.end());
}

std::string MultiPartition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ',';
    os << components_[i].str();
  }
  os << ')';
  return os.str();
}

namespace {

void enumerate_rec(int remaining, int maxpart, std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int next = std::min(remaining, maxpart); next >= 1; --next) {
    acc.push_back(next);
    enumerate_rec(remaining - next, next, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(d, d, acc, out);
  if (d == 0) out = {Partition()};
  return out;  // descending lexicographic by construction
}

std::vector<MultiPartition> enumerate_multipartitions(int colors, int d) {
  if (colors < 1) throw std::invalid_argument("enumerate_multipartitions: need at least one color");
  if (d < 0) throw std::invalid_argument("enumerate_multipartitions: negative size");
  std::vector<MultiPartition> out;
  std::vector<Partition> acc(static_cast<std::size_t>(colors));
  // Recursive product over colors; per-color lists are already in canonical
  // order and the first color is most significant.
  auto rec = [&](auto&& self, int color, int remaining) -> void {
    if (color == colors - 1) {
      for (auto& p : enumerate_partitions(remaining)) {
        acc[static_cast<std::size_t>(color)] = p;
        out.emplace_back(acc);
      }
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      for (auto& p : enumerate_partitions(take)) {
        acc[static_cast<std::size_t>(color)] = p;
        self(self, color + 1, remaining - take);
      }
    }
  };
  rec(rec, 0, d);
  return out;
}

long partition_count(int d) { return static_cast<long>(enumerate_partitions(d).size()); }

// ---------------------------------------------------------------------------
// RootSystem
// ---------------------------------------------------------------------------

RootSystem::RootSystem(RootSystemKind kind, int rank, Eigen::MatrixXi cartan,
                       std::vector<int> exponents, int dual_coxeter)
    : kind_(kind), rank_(rank), cartan_(std::move(cartan)), exponents_(std::move(exponents)),
      dual_coxeter_(dual_coxeter) {
  if (cartan_.rows() != rank_ || cartan_.cols() != rank_)
    throw std::invalid_argument("RootSystem: Cartan matrix size mismatch");
  if (cartan_ != cartan_.transpose().eval())
    throw std::invalid_argument("RootSystem: Cartan matrix not symmetric");
  for (int i = 0; i < rank_; ++i) {
    if (cartan_(i, i) != 2) throw std::invalid_argument("RootSystem: diagonal must be 2");
    for (int j = 0; j < rank_; ++j) {
      if (i != j && cartan_(i, j) != 0 && cartan_(i, j) != -1)
        throw std::invalid_argument("RootSystem: off-diagonal must be 0 or -1");
    }
  }
  if (exponents_.back() != dual_coxeter_ - 1)
    throw std::invalid_argument("RootSystem: top exponent must be h_dual - 1");
}

RootSystem RootSystem::type_a(int rank) {
  if (rank < 1) throw std::invalid_argument("type_a: rank must be >= 1");
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) {
    c(i, i) = 2;
    if (i + 1 < rank) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  }
  std::vector<int> exps(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) exps[static_cast<std::size_t>(i)] = i + 1;
  return RootSystem(RootSystemKind::A, rank, std::move(c), std::move(exps), rank + 1);
}

RootSystem RootSystem::type_d(int rank) {
  if (rank < 4) throw std::invalid_argument("type_d: rank must be >= 4");
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  for (int i = 0; i + 1 < rank - 1; ++i) {
    c(i, i + 1) = -1;
    c(i + 1, i) = -1;
  }
  c(rank - 3, rank - 1) = -1;
  c(rank - 1, rank - 3) = -1;
  std::vector<int> exps;
  for (int i = 1; i <= rank - 1; ++i) exps.push_back(2 * i - 1);
  exps.push_back(rank - 1);
  std::sort(exps.begin(), exps.end());
  return RootSystem(RootSystemKind::D, rank, std::move(c), std::move(exps), 2 * rank - 2);
}

RootSystem RootSystem::type_e(int rank) {
  // Bourbaki labeling: node 2 attaches to node 4.
  if (rank < 6 || rank > 8) throw std::invalid_argument("type_e: rank must be 6, 7 or 8");
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  auto link = [&c](int i, int j) {
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  link(1, 3);
  link(3, 4);
  link(2, 4);
  link(4, 5);
  link(5, 6);
  if (rank >= 7) link(6, 7);
  if (rank == 8) link(7, 8);
  std::vector<int> exps;
  int h_dual = 0;
  RootSystemKind kind = RootSystemKind::E6;
  if (rank == 6) {
    exps = {1, 4, 5, 7, 8, 11};
    h_dual = 12;
    kind = RootSystemKind::E6;
  } else if (rank == 7) {
    exps = {1, 5, 7, 9, 11, 13, 17};
    h_dual = 18;
    kind = RootSystemKind::E7;
  } else {
    exps = {1, 7, 11, 13, 17, 19, 23, 29};
    h_dual = 30;
    kind = RootSystemKind::E8;
  }
  return RootSystem(kind, rank, std::move(c), std::move(exps), h_dual);
}

ParamPoint RootSystem::weyl_reflect(int i, const ParamPoint& p) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("weyl_reflect: color out of range");
  if (p.rank() != rank_) throw std::invalid_argument("weyl_reflect: parameter rank mismatch");
  ParamPoint q = p;
  for (int j = 0; j < rank_; ++j) {
    q.a[static_cast<std::size_t>(j)] =
        p.a[static_cast<std::size_t>(j)] - Rational(cartan_(j, i)) * p.a[static_cast<std::size_t>(i)];
  }
  return q;
}

int RootSystem::gl_rank() const {
  if (kind_ != RootSystemKind::A) throw std::logic_error("gl coordinates exist only for type A");
  return rank_ + 1;
}

std::vector<Rational> RootSystem::gl_from_simple(const std::vector<Rational>& a_simple) const {
  const int r = gl_rank();
  if (static_cast<int>(a_simple.size()) != rank_)
    throw std::invalid_argument("gl_from_simple: size mismatch");
  // a_i = (sum_{j >= i} a^j) + c with c fixed by sum a_i = 0
  std::vector<Rational> a_gl(static_cast<std::size_t>(r), Rational(0));
  for (int i = r - 2; i >= 0; --i) {
    a_gl[static_cast<std::size_t>(i)] =
        a_gl[static_cast<std::size_t>(i) + 1] + a_simple[static_cast<std::size_t>(i)];
  }
  Rational mean(0);
  for (const auto& x : a_gl) mean += x;
  mean /= r;
  for (auto& x : a_gl) x -= mean;
  return a_gl;
}

std::vector<Rational> RootSystem::simple_from_gl(const std::vector<Rational>& a_gl) const {
  const int r = gl_rank();
  if (static_cast<int>(a_gl.size()) != r) throw std::invalid_argument("simple_from_gl: size mismatch");
  std::vector<Rational> a_simple(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    a_simple[static_cast<std::size_t>(i)] =
        a_gl[static_cast<std::size_t>(i)] - a_gl[static_cast<std::size_t>(i) + 1];
  }
  return a_simple;
}

}  // namespace wfock
