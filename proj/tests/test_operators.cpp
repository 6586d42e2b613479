#include <doctest.h>

#include <atomic>
#include <thread>

#include "ringtop/explorer.hpp"
#include "test_util.hpp"

using namespace ringtop;
using test::example34_topology;
using test::ms;

namespace {

// The 9-member beta family listed for the fixture topology, by mask:
// {∅, {a}, {a,b}, {a,c}, {a,b,c}, {a,d}, {a,b,d}, {a,c,d}, R}
const std::vector<Mask> kExample34Beta{0x0, 0x1, 0x3, 0x5, 0x7, 0x9, 0xB, 0xD, 0xF};

std::vector<Mask> all_subsets(Mask full) {
  std::vector<Mask> out;
  for (Mask a = 0; a <= full; ++a) out.push_back(a);
  return out;
}

bool family_subset(const std::vector<Mask>& smaller, const std::vector<Mask>& larger) {
  return std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end());
}

}  // namespace

TEST_CASE("regular open and regular closed families") {
  OperatorTable ops(example34_topology());
  CHECK(ops.family(FamilyKind::RegularOpen) == std::vector<Mask>{0x0, 0xF});
  CHECK(ops.family(FamilyKind::RegularClosed) == std::vector<Mask>{0x0, 0xF});
  CHECK_FALSE(ops.is_regular_open(ms({0})));  // int(cl({a})) = int(R) = R
  CHECK(ops.is_regular_open(0));

  OperatorTable discrete(Topology::discrete(GroundSet::synthetic(2)));
  CHECK(discrete.family(FamilyKind::RegularOpen) == all_subsets(0x3));
  CHECK(discrete.family(FamilyKind::RegularClosed) == all_subsets(0x3));
}

TEST_CASE("delta interior") {
  OperatorTable ops(example34_topology());
  CHECK(ops.delta_interior(ms({0, 1})) == 0);  // only regular opens are ∅, R
  CHECK(ops.delta_interior(0xF) == 0xF);

  OperatorTable discrete(Topology::discrete(GroundSet::synthetic(3)));
  for (Mask a = 0; a <= 0x7; ++a) CHECK(discrete.delta_interior(a) == a);
}

TEST_CASE("delta closure in both modes") {
  OperatorTable ops(example34_topology());
  CHECK(ops.delta_closure(ms({1}), DeltaClosureMode::Standard) == 0xF);
  CHECK(ops.delta_closure(ms({1}), DeltaClosureMode::PaperLiteral) == 0xF);
  CHECK(ops.delta_closure(0, DeltaClosureMode::Standard) == 0);
  CHECK(ops.delta_closure(0, DeltaClosureMode::PaperLiteral) == 0);

  SUBCASE("the two modes coincide on the fixture topology") {
    for (Mask a = 0; a <= 0xF; ++a) {
      CHECK(ops.delta_closure(a, DeltaClosureMode::Standard) ==
            ops.delta_closure(a, DeltaClosureMode::PaperLiteral));
    }
  }
  SUBCASE("standard mode is contained in paper-literal mode") {
    for (int n = 1; n <= 3; ++n) {
      for (const Topology& t : enumerate_topologies(n)) {
        OperatorTable table(t);
        for (Mask a = 0; a <= t.full(); ++a) {
          CHECK(mask_subset(table.delta_closure(a, DeltaClosureMode::Standard),
                            table.delta_closure(a, DeltaClosureMode::PaperLiteral)));
        }
      }
    }
  }
  SUBCASE("discrete topology: identity in either mode") {
    OperatorTable discrete(Topology::discrete(GroundSet::synthetic(2)));
    for (Mask a = 0; a <= 0x3; ++a) {
      CHECK(discrete.delta_closure(a, DeltaClosureMode::Standard) == a);
      CHECK(discrete.delta_closure(a, DeltaClosureMode::PaperLiteral) == a);
    }
  }
}

TEST_CASE("estar and beta families on the fixture topology") {
  OperatorTable ops(example34_topology());
  CHECK(ops.family(FamilyKind::EStar) == all_subsets(0xF));  // e*O(R) = 2^R
  CHECK(ops.family(FamilyKind::Beta) == kExample34Beta);
  CHECK(ops.family(FamilyKind::EStarClosed) == all_subsets(0xF));
}

TEST_CASE("estar family on the indiscrete topology is the full powerset") {
  OperatorTable ops(Topology::indiscrete(GroundSet::synthetic(3)));
  CHECK(ops.family(FamilyKind::EStar) == all_subsets(0x7));
}

TEST_CASE("alpha, semi and pre agree with their defining predicates") {
  // Independent oracle: evaluate the predicates through the raw Topology
  // operators instead of the memoized tables.
  Topology t = example34_topology();
  OperatorTable ops(t);
  for (Mask a = 0; a <= t.full(); ++a) {
    Mask int_a = t.interior(a);
    CHECK(ops.in_family(FamilyKind::Alpha, a) ==
          mask_subset(a, t.interior(t.closure(int_a))));
    CHECK(ops.in_family(FamilyKind::Semi, a) == mask_subset(a, t.closure(int_a)));
    CHECK(ops.in_family(FamilyKind::Pre, a) == mask_subset(a, t.interior(t.closure(a))));
    CHECK(ops.in_family(FamilyKind::Beta, a) ==
          mask_subset(a, t.closure(t.interior(t.closure(a)))));
  }
}

TEST_CASE("family hierarchy holds on every small topology") {
  for (int n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      OperatorTable ops(t);
      const auto& open = ops.family(FamilyKind::Open);
      const auto& alpha = ops.family(FamilyKind::Alpha);
      const auto& semi = ops.family(FamilyKind::Semi);
      const auto& pre = ops.family(FamilyKind::Pre);
      const auto& beta = ops.family(FamilyKind::Beta);
      const auto& estar = ops.family(FamilyKind::EStar);
      CHECK(family_subset(open, alpha));
      CHECK(family_subset(alpha, semi));
      CHECK(family_subset(alpha, pre));
      CHECK(family_subset(semi, beta));
      CHECK(family_subset(pre, beta));
      CHECK(family_subset(beta, estar));
    }
  }
}

TEST_CASE("estar family contains ∅ and X and is union-closed") {
  for (int n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      OperatorTable ops(t);
      const auto& estar = ops.family(FamilyKind::EStar);
      CHECK(ops.in_family(FamilyKind::EStar, 0));
      CHECK(ops.in_family(FamilyKind::EStar, t.full()));
      for (Mask a : estar) {
        for (Mask b : estar) {
          CHECK(ops.in_family(FamilyKind::EStar, a | b));
        }
      }
    }
  }
}

TEST_CASE("generalized interior and closure on the fixture topology") {
  OperatorTable ops(example34_topology());
  CHECK(ops.gen_closure(FamilyKind::EStar, ms({0})) == ms({0}));  // e*-cl({a}) = {a}
  CHECK(ops.gen_interior(FamilyKind::EStar, 0) == 0);
  CHECK(ops.gen_interior(FamilyKind::EStar, ms({1})) == ms({1}));
  // beta: every beta set containing b also contains a, so {b} has empty
  // beta-interior; {b} itself is beta-closed (complement of {a,c,d}).
  CHECK(ops.gen_interior(FamilyKind::Beta, ms({1})) == 0);
  CHECK(ops.gen_closure(FamilyKind::Beta, ms({1})) == ms({1}));
}

TEST_CASE("generalized operators: duality, idempotence, monotonicity") {
  for (int n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      OperatorTable ops(t);
      const Mask full = t.full();
      for (FamilyKind kind : kAllFamilyKinds) {
        for (Mask a = 0; a <= full; ++a) {
          Mask gi = ops.gen_interior(kind, a);
          Mask gc = ops.gen_closure(kind, a);
          CHECK(gi == (full & ~ops.gen_closure(kind, full & ~a)));
          CHECK(mask_subset(gi, a));
          CHECK(mask_subset(a, gc));
          CHECK(ops.gen_interior(kind, gi) == gi);
          CHECK(ops.gen_closure(kind, gc) == gc);
        }
        for (Mask b = 0; b <= full; ++b) {
          for (Mask a = b;; a = (a - 1) & b) {  // all subsets a of b
            CHECK(mask_subset(ops.gen_interior(kind, a), ops.gen_interior(kind, b)));
            CHECK(mask_subset(ops.gen_closure(kind, a), ops.gen_closure(kind, b)));
            if (a == 0) break;
          }
        }
      }
    }
  }
}

TEST_CASE("operator chain: δ-int ⊆ int ⊆ id ⊆ cl ⊆ δ-cl") {
  for (int n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      for (DeltaClosureMode mode :
           {DeltaClosureMode::Standard, DeltaClosureMode::PaperLiteral}) {
        OperatorTable ops(t, mode);
        for (Mask a = 0; a <= t.full(); ++a) {
          CHECK(mask_subset(ops.delta_interior(a), ops.interior(a)));
          CHECK(mask_subset(ops.interior(a), a));
          CHECK(mask_subset(a, ops.closure(a)));
          CHECK(mask_subset(ops.closure(a), ops.delta_closure(a)));
        }
      }
    }
  }
}

TEST_CASE("minimal family members at a point") {
  OperatorTable ops(example34_topology());
  // All singletons are e*-open, so the minimal e*-member at x is {x}.
  for (int x = 0; x < 4; ++x) {
    CHECK(ops.minimal_members_at(FamilyKind::EStar, x) == std::vector<Mask>{mask_bit(x)});
  }
  // Every beta member containing b contains a; the minimal one is {a,b}.
  CHECK(ops.minimal_members_at(FamilyKind::Beta, 1) == std::vector<Mask>{ms({0, 1})});
  CHECK(ops.minimal_members_at(FamilyKind::Beta, 0) == std::vector<Mask>{ms({0})});
}

TEST_CASE("a shared operator table is safe under concurrent family queries") {
  Topology t = example34_topology();
  OperatorTable shared(t);
  OperatorTable serial(t);

  std::vector<std::vector<Mask>> expected;
  for (FamilyKind kind : kAllFamilyKinds) expected.push_back(serial.family(kind));

  std::atomic<int> mismatches{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&shared, &expected, &mismatches] {
      for (int round = 0; round < 50; ++round) {
        for (std::size_t k = 0; k < kAllFamilyKinds.size(); ++k) {
          FamilyKind kind = kAllFamilyKinds[k];
          if (shared.family(kind) != expected[k]) ++mismatches;
          for (int x = 0; x < 4; ++x) {
            if (shared.minimal_members_at(kind, x).empty() &&
                !expected[k].empty()) {
              ++mismatches;
            }
          }
          if (shared.gen_interior(kind, 0x5) !=
              (0xF & ~shared.gen_closure(kind, 0xA))) {
            ++mismatches;
          }
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  CHECK(mismatches == 0);
}

TEST_CASE("kind and mode names round-trip") {
  for (FamilyKind kind : kAllFamilyKinds) {
    CHECK(parse_family_kind(to_string(kind)) == kind);
  }
  CHECK(parse_family_kind("nope") == std::nullopt);
  CHECK(parse_delta_mode("standard") == DeltaClosureMode::Standard);
  CHECK(parse_delta_mode("paper-literal") == DeltaClosureMode::PaperLiteral);
  CHECK(parse_delta_mode("other") == std::nullopt);
}

TEST_CASE("single-shot operator wrappers match the table") {
  Topology t = example34_topology();
  OperatorTable ops(t);
  CHECK(regular_open_family(t) == ops.family(FamilyKind::RegularOpen));
  CHECK(delta_interior(t, ms({0, 1})) == ops.delta_interior(ms({0, 1})));
  CHECK(delta_closure(t, ms({1})) == ops.delta_closure(ms({1})));
  CHECK(family(t, FamilyKind::Beta) == kExample34Beta);
  CHECK(gen_interior(t, FamilyKind::EStar, ms({1})) == ms({1}));
  CHECK(gen_closure(t, FamilyKind::EStar, ms({0})) == ms({0}));
  CHECK(is_regular_open(t, 0));
}
