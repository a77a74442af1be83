#include "test_util.hpp"

#include <numeric>

#include "pleth/partition.hpp"

using namespace pleth;

TEST_CASE("conjugate and statistics", "[partitions]") {
  Partition mu{5, 3, 3};
  REQUIRE(mu.conjugate() == Partition{3, 3, 3, 1, 1});
  REQUIRE(Partition().conjugate() == Partition());
  REQUIRE(Partition{4}.conjugate() == Partition{1, 1, 1, 1});
  REQUIRE(mu.arm(0, 1) == 3);
  REQUIRE(mu.leg(0, 1) == 2);
  REQUIRE(mu.hook(0, 1) == 6);
  REQUIRE(Partition{1}.hook(0, 0) == 1);
  REQUIRE(Partition{5, 3, 1, 1}.hooks() == std::vector<int>{1, 1, 1, 2, 2, 2, 4, 5, 5, 8});
  REQUIRE(mu.n() == 9);
  REQUIRE(Partition().n() == 0);
  REQUIRE(Partition{1, 1, 1}.n() == 3);
  REQUIRE(Partition{2, 2, 1}.z() == Rational(8));
  SECTION("off-diagram arm and leg go negative") {
    REQUIRE(Partition{2}.arm(1, 0) == -1);
    REQUIRE(Partition{2}.leg(0, 3) == -1);
  }
}

TEST_CASE("parsing and text form", "[partitions]") {
  REQUIRE(Partition::parse("[5,3,1,1]") == Partition{5, 3, 1, 1});
  REQUIRE(Partition::parse("311") == Partition{3, 1, 1});
  REQUIRE(Partition::parse("[]") == Partition());
  REQUIRE(Partition{5, 3, 1, 1}.str() == "[5,3,1,1]");
  REQUIRE_THROWS(Partition::parse("[1,2]"));
  REQUIRE_THROWS(Partition::parse("[a]"));
}

TEST_CASE("enumeration", "[partitions]") {
  REQUIRE(partitions(0).size() == 1);
  REQUIRE(partitions(4).size() == 5);
  REQUIRE(partitions(10).size() == 42);
  for (int n = 0; n <= 15; ++n) REQUIRE(static_cast<long>(partitions(n).size()) == partition_count(n));
  const auto& p4 = partitions(4);
  REQUIRE(p4.front() == Partition{4});
  REQUIRE(p4[1] == Partition{3, 1});
  REQUIRE(p4.back() == Partition{1, 1, 1, 1});
  for (size_t i = 1; i < p4.size(); ++i) REQUIRE(p4[i - 1] > p4[i]);
}

TEST_CASE("conjugation properties", "[partitions]") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : partitions(n)) {
      REQUIRE(p.conjugate().conjugate() == p);
      REQUIRE(p.conjugate().size() == p.size());
      REQUIRE(p.conjugate().hooks() == p.hooks());
      int nsum = 0;
      for (auto [i, j] : p.cells()) nsum += p.leg(i, j);
      REQUIRE(nsum == p.n());
    }
  }
}

TEST_CASE("cores and lattice vectors", "[partitions]") {
  Partition lam{5, 3, 1, 1};
  REQUIRE(is_core(lam, 3));
  REQUIRE(is_core(Partition{1}, 2));
  REQUIRE(is_core(Partition{1}, 7));
  REQUIRE(core_vector(lam, 3) == std::vector<int>{0, 2, -2});
  REQUIRE(core_v_vector(lam, 3) == std::vector<int>{-1, 6, -5});
  REQUIRE(core_v_vector(Partition(), 3) == std::vector<int>{-1, 0, 1});
  REQUIRE(core_from_v_vector({-1, 6, -5}, 3) == lam);
  REQUIRE_THROWS(core_v_vector(Partition{2}, 2));
  REQUIRE_THROWS(core_v_vector(Partition{3}, 3));
  REQUIRE_THROWS(core_from_v_vector({0, 0, 0}, 3));

  SECTION("round trips, size formula and conjugation for r in {3,5,7}") {
    for (int r : {3, 5, 7}) {
      int k = (r - 1) / 2;
      auto cores = cores_up_to(r, 30);
      // Brute-force count of r-cores by hooks.
      size_t brute = 0;
      for (int n = 0; n <= 30; ++n)
        for (const auto& p : partitions(n))
          if (is_core(p, r)) ++brute;
      REQUIRE(cores.size() == brute);
      for (const auto& c : cores) {
        REQUIRE(is_core(c, r));
        auto n = core_vector(c, r);
        REQUIRE(std::accumulate(n.begin(), n.end(), 0) == 0);
        REQUIRE(core_from_vector(n, r) == c);
        REQUIRE(core_size_from_vector(n, r) == c.size());
        auto v = core_v_vector(c, r);
        long sq = 0;
        for (int x : v) sq += static_cast<long>(x) * x;
        // |c| = sum v^2 / (2r) - (r^2 - 1)/24, cleared of denominators.
        REQUIRE(24 * sq == 2 * r * (24 * static_cast<long>(c.size()) + r * r - 1));
        auto vc = core_v_vector(c.conjugate(), r);
        for (int a = -k; a <= k; ++a) REQUIRE(vc[static_cast<size_t>(a + k)] == -v[static_cast<size_t>(-a + k)]);
      }
    }
  }

  SECTION("2-cores are staircases") {
    auto cores = cores_up_to(2, 45);
    REQUIRE(cores.size() == 10);  // staircases of size 0,1,3,...,45
    for (const auto& c : cores) {
      int m = c.length();
      for (int i = 0; i < m; ++i) REQUIRE(c[i] == m - i);
    }
    for (int n = 0; n <= 12; ++n)
      for (const auto& p : partitions(n)) {
        int m = p.length();
        bool stair = true;
        for (int i = 0; i < m; ++i) stair = stair && p[i] == m - i;
        REQUIRE(is_core(p, 2) == stair);
      }
  }

  SECTION("core_of removes rim hooks") {
    REQUIRE(core_of(Partition{3}, 3) == Partition());
    REQUIRE(core_of(Partition{4}, 3) == Partition{1});
    REQUIRE(core_of(lam, 3) == lam);
  }

  SECTION("even r uses the n-vector only") {
    for (const auto& c : cores_up_to(4, 20)) REQUIRE(core_from_vector(core_vector(c, 4), 4) == c);
  }
}

TEST_CASE("maya diagrams", "[partitions]") {
  REQUIRE(maya_set(Partition(), 3) == std::vector<int>{0, -1, -2});
  auto m = maya_set(Partition{5, 3, 1, 1}, 5);
  REQUIRE(m == std::vector<int>{5, 2, -1, -2, -4});
  REQUIRE(from_maya(maya(Partition{5, 3, 1, 1}, 6)) == Partition{5, 3, 1, 1});
  for (int i = 0; i <= 5; ++i) {
    auto r = maya_insert(Partition(), i);
    REQUIRE(r);
    REQUIRE(r->first == (i ? Partition{i} : Partition()));
    REQUIRE(r->second == 1);
  }
  // Occupied: {x in m(empty) - 1} = {-1, -2, ...}.
  REQUIRE_FALSE(maya_insert(Partition(), -1));
  // Inserting below a row moves it down with a sign.
  auto r = maya_insert(Partition{2}, -1);
  // m(2)-1 = {1, -2, -3, ...}; inserting -1 gives {1, -1, -2, ...} = m((1)).
  REQUIRE(r);
  REQUIRE(r->first == Partition{1});
  REQUIRE(r->second == -1);
}
