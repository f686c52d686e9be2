#include <random>

#include "doctest.h"
#include "test_helpers.hpp"
#include "wfock/rootdata.hpp"

using namespace wfock;

TEST_CASE("partition enumeration matches the stated lists") {
  const auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].parts() == std::vector<int>{4});
  CHECK(p4[1].parts() == std::vector<int>{3, 1});
  CHECK(p4[2].parts() == std::vector<int>{2, 2});
  CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
  CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});

  const auto mp = enumerate_multipartitions(2, 2);
  REQUIRE(mp.size() == 5);
  CHECK(mp[0].str() == "([2],[])");
  CHECK(mp[1].str() == "([1,1],[])");
  CHECK(mp[2].str() == "([1],[1])");
  CHECK(mp[3].str() == "([],[2])");
  CHECK(mp[4].str() == "([],[1,1])");

  const auto empty3 = enumerate_multipartitions(3, 0);
  REQUIRE(empty3.size() == 1);
  CHECK(empty3[0].total_size() == 0);

  for (std::size_t i = 0; i + 1 < mp.size(); ++i) CHECK(mp[i] < mp[i + 1]);
}

TEST_CASE("multipartition counts match the eta-power generating function") {
  for (int colors = 1; colors <= 3; ++colors) {
    // coefficients of prod (1 - q^n)^{-colors} by iterated geometric series
    std::vector<long> series(9, 0);
    series[0] = 1;
    for (int copy = 0; copy < colors; ++copy) {
      for (int n = 1; n <= 8; ++n) {
        for (int d = n; d <= 8; ++d) series[static_cast<std::size_t>(d)] += series[static_cast<std::size_t>(d - n)];
      }
    }
    for (int d = 0; d <= 8; ++d) {
      CHECK(static_cast<long>(enumerate_multipartitions(colors, d).size()) ==
            series[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("arm leg hook") {
  const Partition la({4, 2, 1});
  int cells = 0;
  for (int r = 0; r < la.length(); ++r) {
    for (int c = 0; c < la.parts()[static_cast<std::size_t>(r)]; ++c) {
      CHECK(la.arm(r, c) + la.leg(r, c) + 1 == la.hook(r, c));
      ++cells;
    }
  }
  CHECK(cells == la.size());
  CHECK(la.conjugate().conjugate() == la);
  CHECK(la.leg(0, 0) == 2);
  CHECK(Partition().leg(0, 0) == -1);  // outside an empty diagram
}

TEST_CASE("root system tables") {
  const RootSystem a3 = RootSystem::type_a(3);
  CHECK(a3.exponents() == std::vector<int>{1, 2, 3});
  CHECK(a3.dual_coxeter() == 4);
  CHECK(a3.pairing(0, 1) == -1);
  CHECK(a3.pairing(0, 2) == 0);

  const RootSystem d4 = RootSystem::type_d(4);
  CHECK(d4.exponents() == std::vector<int>{1, 3, 3, 5});
  CHECK(d4.dual_coxeter() == 6);

  const RootSystem e6 = RootSystem::type_e(6);
  CHECK(e6.exponents().back() == e6.dual_coxeter() - 1);
  CHECK(e6.cartan() == e6.cartan().transpose().eval());
}

TEST_CASE("weyl reflections") {
  const RootSystem a1 = RootSystem::type_a(1);
  ParamPoint p = testing::small_point(1);
  const ParamPoint q = a1.weyl_reflect(0, p);
  CHECK(q.a[0] == -p.a[0]);
  CHECK(q.eps1 == p.eps1);

  const RootSystem a2 = RootSystem::type_a(2);
  ParamPoint r = testing::small_point(2);
  const ParamPoint s1r = a2.weyl_reflect(0, r);
  CHECK(s1r.a[0] == -r.a[0]);
  CHECK(s1r.a[1] == r.a[0] + r.a[1]);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    ParamPoint x = testing::small_point(2);
    x.a[0] += testing::random_rational(rng);
    x.a[1] += testing::random_rational(rng);
    for (int i = 0; i < 2; ++i) CHECK(a2.weyl_reflect(i, a2.weyl_reflect(i, x)) == x);
  }
}

TEST_CASE("type A gl coordinates") {
  const RootSystem a2 = RootSystem::type_a(2);
  const ParamPoint p = testing::small_point(2);
  const auto gl = a2.gl_from_simple(p.a);
  REQUIRE(gl.size() == 3);
  CHECK(gl[0] + gl[1] + gl[2] == 0);
  CHECK(gl[0] - gl[1] == p.a[0]);
  CHECK(gl[1] - gl[2] == p.a[1]);
  CHECK(a2.simple_from_gl(gl) == p.a);

  // simple reflection transposes adjacent gl coordinates
  const ParamPoint refl = a2.weyl_reflect(0, p);
  const auto gl_r = a2.gl_from_simple(refl.a);
  CHECK(gl_r[0] == gl[1]);
  CHECK(gl_r[1] == gl[0]);
  CHECK(gl_r[2] == gl[2]);
}
