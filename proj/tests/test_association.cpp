#include <doctest.h>

#include <limits>
#include <random>

#include "dcsim/association.hpp"
#include "oracles.hpp"

using namespace dcsim;

namespace {

MeasurementSnapshot rsrp_only(const std::vector<std::vector<double>>& rows, std::size_t cols) {
  MeasurementSnapshot s;
  s.rsrp = oracle::to_matrix(rows, cols);
  return s;
}

// Nodes 0, 1 are macro sectors, node 2 a pico.
const std::vector<std::vector<double>> kHand{
    {-60, -70, -80},  // u0: primary 0, second 1
    {-75, -65, -85},  // u1: primary 1, second 0
    {-72, -90, -68},  // u2: primary 2, second 0
    {-50, -55, -90},  // u3: primary 0, second 1
    {-90, -62, -58},  // u4: primary 2, second 1
};

void require_invariants(const AssociationState& s) {
  const auto why = check_invariants(s);
  INFO(why);
  REQUIRE(why.empty());
}

}  // namespace

TEST_CASE("primary association") {
  const auto snap = rsrp_only(kHand, 3);
  const auto s = associate_primary(snap);
  CHECK(s.primary == std::vector<NodeId>{0, 1, 2, 0, 2});
  CHECK(s.rsrp_b[0] == std::vector<double>{-60, -50});
  CHECK(s.rsrp_b[1] == std::vector<double>{-65});
  CHECK(s.rsrp_b[2] == std::vector<double>{-68, -58});
  CHECK(s.count == 0);
  for (const auto& sc : s.secondary) CHECK_FALSE(sc);
  require_invariants(s);

  SUBCASE("ties go to the lowest id") {
    const auto t = associate_primary(rsrp_only({{-70, -70, -71}}, 3));
    CHECK(t.primary[0] == 0);
  }
  SUBCASE("no nodes") { CHECK_THROWS(associate_primary(rsrp_only({{}}, 0))); }
}

TEST_CASE("primary is the argmax by brute force") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> level(-110.0, -50.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<double>> rows(4, std::vector<double>(3));
    for (auto& r : rows)
      for (auto& v : r) v = level(gen);
    const auto s = associate_primary(rsrp_only(rows, 3));
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t j = 0; j < 3; ++j) CHECK(rows[u][s.primary[u]] >= rows[u][j]);
  }
}

TEST_CASE("second-best ordering") {
  const auto snap = rsrp_only(kHand, 3);
  const auto s = associate_primary(snap);
  CHECK(second_best_node(snap, s, 0) == NodeId{1});
  CHECK(second_best_node(snap, s, 2) == NodeId{0});
  CHECK(second_best_order(snap, s) == std::vector<UeId>{3, 4, 0, 2, 1});

  SUBCASE("three UEs at -60, -70, -80") {
    const auto m = rsrp_only({{-50, -80}, {-50, -60}, {-70, -40}}, 2);
    CHECK(second_best_order(m, associate_primary(m)) == std::vector<UeId>{1, 2, 0});
  }
  SUBCASE("ties keep UE order") {
    const auto m = rsrp_only({{-50, -60}, {-40, -60}, {-60, -30}}, 2);
    CHECK(second_best_order(m, associate_primary(m)) == std::vector<UeId>{0, 1, 2});
  }
  SUBCASE("single node has no second link") {
    const auto m = rsrp_only({{-50}, {-60}}, 1);
    const auto st = associate_primary(m);
    CHECK(second_best_order(m, st).empty());
    CHECK_FALSE(second_best_node(m, st, 0));
  }
}

TEST_CASE("centralized admission on the hand instance") {
  const auto snap = rsrp_only(kHand, 3);
  const auto primary = associate_primary(snap);

  SUBCASE("unlimited capacity, rank 1") {
    const auto s = centralized_dc(snap, primary, 5, 1);
    require_invariants(s);
    CHECK(s.count == 2);
    CHECK(s.secondary[3] == NodeId{1});
    CHECK(s.secondary[4] == NodeId{1});
    CHECK_FALSE(s.secondary[0]);  // -70 beats nothing in {-65, -55, -62}
    CHECK_FALSE(s.secondary[1]);
    CHECK_FALSE(s.secondary[2]);
    CHECK(s.rsrp_b[1] == std::vector<double>{-65, -55, -62});
  }
  SUBCASE("capacity binds") {
    const auto s = centralized_dc(snap, primary, 1, 1);
    require_invariants(s);
    CHECK(s.count == 1);
    CHECK(s.secondary[3] == NodeId{1});
    CHECK_FALSE(s.secondary[4]);
  }
  SUBCASE("zero capacity") {
    const auto s = centralized_dc(snap, primary, 0, 1);
    CHECK(s == [&] {
      auto p = primary;
      p.capacity_N = 0;
      return p;
    }());
  }
  SUBCASE("rank 2 rejects everyone") {
    const auto s = centralized_dc(snap, primary, 5, 2);
    CHECK(s.count == 0);
  }
  SUBCASE("rerun discards earlier secondaries") {
    const auto once = centralized_dc(snap, primary, 5, 1);
    CHECK(centralized_dc(snap, once, 5, 1) == once);
    CHECK(centralized_dc(snap, once, 0, 1).count == 0);
    require_invariants(centralized_dc(snap, once, 0, 1));
  }
}

TEST_CASE("centralized admission when every candidate is weaker") {
  const auto snap = rsrp_only({{-60, -70}, {-80, -65}}, 2);
  const auto s = centralized_dc(snap, associate_primary(snap), 10, 1);
  CHECK(s.count == 0);
  require_invariants(s);
}

TEST_CASE("distributed threshold") {
  const auto snap = rsrp_only(kHand, 3);
  const auto primary = associate_primary(snap);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(distributed_dc(snap, primary, inf).count == 0);
  const auto all = distributed_dc(snap, primary, -inf);
  CHECK(all.count == 5);
  require_invariants(all);
  const auto s70 = distributed_dc(snap, primary, -70.0);  // strict: -70 is out
  CHECK(s70.count == 2);
  CHECK(s70.secondary[3] == NodeId{1});
  CHECK(s70.secondary[4] == NodeId{1});
  CHECK(distributed_dc(snap, primary, -78.0).count == 5);
  CHECK(distributed_dc(snap, primary, -90.0).count == 5);
  CHECK(distributed_dc(snap, primary, -73.0).count == 4);
  require_invariants(s70);
}

TEST_CASE("invariants catch corruption") {
  const auto snap = rsrp_only(kHand, 3);
  auto s = centralized_dc(snap, associate_primary(snap), 5, 1);
  REQUIRE(check_invariants(s).empty());
  auto bad = s;
  bad.count = 3;
  CHECK_FALSE(check_invariants(bad).empty());
  bad = s;
  bad.secondary[3] = NodeId{0};  // equals primary
  CHECK_FALSE(check_invariants(bad).empty());
  bad = s;
  bad.rsrp_b[1].pop_back();
  CHECK_FALSE(check_invariants(bad).empty());
  bad = s;
  bad.capacity_N = 1;
  CHECK_FALSE(check_invariants(bad).empty());
}

TEST_CASE("a constant RSRP offset changes nothing") {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_instance(gen);
    auto shifted = inst.rsrp;
    for (auto& r : shifted)
      for (auto& v : r) v += 17.25;
    const auto a = rsrp_only(inst.rsrp, inst.num_nodes);
    const auto b = rsrp_only(shifted, inst.num_nodes);
    const auto ca = centralized_dc(a, associate_primary(a), inst.capacity_N, inst.rank_n);
    const auto cb = centralized_dc(b, associate_primary(b), inst.capacity_N, inst.rank_n);
    CHECK(ca.primary == cb.primary);
    CHECK(ca.secondary == cb.secondary);
    const auto da = distributed_dc(a, associate_primary(a), -80.0);
    const auto db = distributed_dc(b, associate_primary(b), -80.0 + 17.25);
    CHECK(da.secondary == db.secondary);
  }
}

TEST_CASE("centralized admission matches a literal transcription on random instances") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = oracle::random_instance(gen);
    const auto want = oracle::centralized_literal(inst.rsrp, inst.capacity_N, inst.rank_n);
    const auto snap = rsrp_only(inst.rsrp, inst.num_nodes);
    const auto got = centralized_dc(snap, associate_primary(snap), inst.capacity_N, inst.rank_n);
    require_invariants(got);
    REQUIRE(got.count == static_cast<std::size_t>(want.count));
    for (std::size_t u = 0; u < got.num_ues(); ++u) {
      CHECK(got.primary[u] == static_cast<NodeId>(want.A1.at(static_cast<int>(u))));
      const auto it = want.A2.find(static_cast<int>(u));
      if (it == want.A2.end()) {
        CHECK_FALSE(got.secondary[u]);
      } else {
        CHECK(got.secondary[u] == static_cast<NodeId>(it->second));
      }
    }
    for (std::size_t j = 0; j < got.num_nodes(); ++j) {
      const auto it = want.RSRP_B.find(static_cast<int>(j));
      const std::vector<double> expect = it == want.RSRP_B.end() ? std::vector<double>{} : it->second;
      CHECK(got.rsrp_b[j] == expect);
    }
  }
}

TEST_CASE("capacity truncates the unlimited admission sequence") {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::random_instance(gen);
    const auto snap = rsrp_only(inst.rsrp, inst.num_nodes);
    const auto primary = associate_primary(snap);
    const auto unlimited = centralized_dc(snap, primary, inst.rsrp.size(), inst.rank_n);
    for (std::size_t k = 0; k <= inst.rsrp.size(); ++k) {
      const auto s = centralized_dc(snap, primary, k, inst.rank_n);
      CHECK(s.count == std::min(k, unlimited.count));
      for (std::size_t u = 0; u < s.num_ues(); ++u)
        if (s.secondary[u]) CHECK(s.secondary[u] == unlimited.secondary[u]);
    }
  }
}

TEST_CASE("association csv") {
  const auto snap = rsrp_only({{-60, -70}, {-80, -65}}, 2);
  const auto s = distributed_dc(snap, associate_primary(snap), -75.0);
  CHECK(association_csv(s, "distributed").str() ==
        "ue_id,primary_node,secondary_node,policy\n0,0,1,distributed\n1,1,,distributed\n");
}
