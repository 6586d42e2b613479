#include <doctest.h>

#include <algorithm>

#include "ringtop/explorer.hpp"
#include "test_util.hpp"

using namespace ringtop;
using test::ms;

TEST_CASE("topology counts for small carriers") {
  CHECK(count_topologies(1) == 1);
  CHECK(count_topologies(2) == 4);
  CHECK(count_topologies(3) == 29);
  CHECK(count_topologies(4) == 355);
  CHECK_THROWS_AS(count_topologies(0), InputError);
  CHECK_THROWS_AS(count_topologies(5), InputError);
}

TEST_CASE("enumerated topologies are unique, valid and canonically ordered") {
  std::vector<Topology> topologies = enumerate_topologies(3);
  CHECK(topologies.size() == 29);
  CHECK(topologies.front().opens() == std::vector<Mask>{0x0, 0x7});  // indiscrete first
  CHECK(topologies.back().opens().size() == 8);                      // discrete last
  for (std::size_t i = 0; i < topologies.size(); ++i) {
    for (std::size_t j = i + 1; j < topologies.size(); ++j) {
      CHECK_FALSE(topologies[i] == topologies[j]);
    }
  }
}

TEST_CASE("ring pool contents") {
  SUBCASE("order 1 is exactly the zero ring") {
    std::vector<FiniteRing> pool = ring_pool(1);
    REQUIRE(pool.size() == 1);
    CHECK(pool[0].size() == 1);
    CHECK(pool[0].unity() == 0);
  }
  SUBCASE("order 4 catalog") {
    std::vector<FiniteRing> pool = ring_pool(4);
    REQUIRE(pool.size() == 3);
    CHECK(pool[0].name() == "Z4");
    CHECK(pool[1].name() == "Z2xZ2");
    CHECK(pool[2].name() == "example34");
    CHECK(pool[2].same_tables(catalog_example34()));
  }
  SUBCASE("order 6 and 8 include products") {
    CHECK(ring_pool(6).size() == 2);
    CHECK(ring_pool(8).size() == 3);
    CHECK_THROWS_AS(ring_pool(9), InputError);
  }
}

TEST_CASE("brute-force ring enumeration") {
  std::vector<FiniteRing> pool = ring_pool(4, true);
  std::vector<FiniteRing> catalog_only = ring_pool(4);
  CHECK(pool.size() > catalog_only.size());

  SUBCASE("no duplicate tables") {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        CHECK_FALSE(pool[i].same_tables(pool[j]));
      }
    }
  }
  SUBCASE("contains the zero-multiplication ring on the cyclic group") {
    bool found = false;
    for (const FiniteRing& ring : pool) {
      bool zero_mul = true;
      for (int x = 0; x < 4 && zero_mul; ++x) {
        for (int y = 0; y < 4; ++y) {
          if (ring.mul(x, y) != ring.zero()) {
            zero_mul = false;
            break;
          }
        }
      }
      if (zero_mul && ring.add(1, 1) == 2) found = true;
    }
    CHECK(found);
  }
  SUBCASE("deterministic across calls") {
    CHECK(pool == ring_pool(4, true));
  }
  SUBCASE("capped at order 4") {
    CHECK_THROWS_AS(ring_pool(5, true), InputError);
  }
}

TEST_CASE("goal parsing and validation") {
  CHECK(SearchGoal::parse("census").kind == SearchGoal::Kind::Census);
  SearchGoal separating = SearchGoal::parse("separating:beta,estar");
  CHECK(separating.weaker == FamilyKind::Beta);
  CHECK(separating.stronger == FamilyKind::EStar);
  CHECK(SearchGoal::parse("converse:T4.11").check_id == "T4.11-converse");
  CHECK(SearchGoal::parse("converse-counterexample:T4.11-converse").check_id ==
        "T4.11-converse");

  CHECK_THROWS_AS(SearchGoal::parse("separating:estar,beta"), InputError);
  CHECK_THROWS_AS(SearchGoal::parse("separating:alpha,beta"), InputError);
  CHECK_THROWS_AS(SearchGoal::parse("converse:T3.4a"), InputError);
  CHECK_THROWS_AS(SearchGoal::parse("wat"), InputError);
  CHECK(SearchGoal::separating(FamilyKind::Open, FamilyKind::EStar).describe() ==
        "separating(open,estar)");
}

TEST_CASE("search rediscovers the fixture structure") {
  SearchOptions options;
  options.threads = 1;
  std::vector<SearchHit> hits =
      search(SearchGoal::separating(FamilyKind::Beta, FamilyKind::EStar), options);
  CHECK_FALSE(hits.empty());

  const FiniteRing fixture_ring = catalog_example34();
  const std::vector<Mask> fixture_opens{0x0, 0x1, 0x3, 0xF};
  bool found = false;
  for (const SearchHit& hit : hits) {
    CHECK(hit.classification.satisfies(FamilyKind::EStar));
    CHECK_FALSE(hit.classification.satisfies(FamilyKind::Beta));
    // Every hit re-verifies.
    Classification again = classify(hit.structure);
    CHECK(again == hit.classification);
    if (hit.structure.ring.same_tables(fixture_ring) &&
        hit.structure.topology.opens() == fixture_opens) {
      found = true;
      const CheckReport& beta_add =
          hit.classification.result(FamilyKind::Beta).conditions[0];
      REQUIRE(beta_add.witness.has_value());
      CHECK(replay_condition_failure(hit.structure, FamilyKind::Beta,
                                     RingCondition::Addition, *beta_add.witness));
    }
  }
  CHECK(found);
}

TEST_CASE("search results are identical across parallelism levels") {
  SearchGoal goal = SearchGoal::separating(FamilyKind::Beta, FamilyKind::EStar);
  SearchOptions serial;
  serial.threads = 1;
  SearchOptions parallel;
  parallel.threads = 8;
  CHECK(search(goal, serial) == search(goal, parallel));
}

TEST_CASE("separating open from beta finds nothing at order 2") {
  SearchOptions options;
  options.max_points = 2;
  options.max_order = 2;
  std::vector<SearchHit> hits =
      search(SearchGoal::separating(FamilyKind::Open, FamilyKind::Beta), options);
  CHECK(hits.empty());
}

TEST_CASE("converse-counterexample search finds the fixture structure") {
  SearchOptions options;
  std::vector<SearchHit> hits =
      search(SearchGoal::converse_counterexample("T4.11"), options);
  CHECK_FALSE(hits.empty());
  bool found = false;
  for (const SearchHit& hit : hits) {
    REQUIRE(hit.report.has_value());
    REQUIRE(hit.report->witness.has_value());
    CHECK(hit.classification.satisfies(FamilyKind::EStar));
    if (hit.structure.ring.same_tables(catalog_example34()) &&
        hit.structure.topology.opens() == std::vector<Mask>{0x0, 0x1, 0x3, 0xF}) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("census covers the whole grid") {
  SearchOptions options;
  options.max_points = 2;
  options.max_order = 2;
  std::vector<SearchHit> hits = search(SearchGoal::census(), options);
  // order 1: 1 ring × 1 topology; order 2: 1 ring × 4 topologies.
  CHECK(hits.size() == 5);
  int estar_count = 0;
  for (const SearchHit& hit : hits) {
    if (hit.classification.satisfies(FamilyKind::EStar)) ++estar_count;
  }
  // Z2 with either Sierpinski topology is estar but not open; all five cells
  // are e*-topological.
  CHECK(estar_count == 5);
}

TEST_CASE("search option validation") {
  SearchOptions bad;
  bad.max_points = 5;
  CHECK_THROWS_AS(search(SearchGoal::census(), bad), InputError);
  bad.max_points = 0;
  CHECK_THROWS_AS(search(SearchGoal::census(), bad), InputError);
}
