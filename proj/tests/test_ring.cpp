#include <doctest.h>

#include "test_util.hpp"

using namespace ringtop;
using test::ms;

namespace {

std::vector<std::vector<int>> example34_add() {
  return {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
}

std::vector<std::vector<int>> example34_mul() {
  return {{0, 0, 0, 0}, {0, 2, 0, 2}, {0, 0, 0, 0}, {0, 2, 0, 2}};
}

}  // namespace

TEST_CASE("validate derives zero, unity and units") {
  SUBCASE("fixture ring: zero=a, no unity, no units") {
    FiniteRing r = FiniteRing::validate(GroundSet({"a", "b", "c", "d"}), example34_add(),
                                        example34_mul());
    CHECK(r.zero() == 0);
    CHECK_FALSE(r.unity().has_value());
    CHECK(r.units() == 0);
  }
  SUBCASE("Z4: zero=0, unity=1, units={1,3}") {
    FiniteRing r = catalog_zn(4);
    CHECK(r.zero() == 0);
    CHECK(r.unity() == 1);
    CHECK(r.units() == ms({1, 3}));
    CHECK(r.unit_elements() == std::vector<int>{1, 3});
  }
  SUBCASE("trivial ring: unity equals zero and is a unit") {
    FiniteRing r = catalog_zn(1);
    CHECK(r.zero() == 0);
    CHECK(r.unity() == 0);
    CHECK(r.units() == ms({0}));
  }
}

TEST_CASE("validate rejects broken tables with witnesses") {
  GroundSet g({"a", "b", "c", "d"});

  SUBCASE("mutated add entry breaks commutativity") {
    auto add = example34_add();
    add[1][3] = 1;  // b+d := b
    std::string message = test::input_error_message(
        [&] { FiniteRing::validate(g, add, example34_mul()); });
    CHECK(test::message_contains(message, "commutative"));
    CHECK(test::message_contains(message, "(b, d)"));
  }
  SUBCASE("non-associative multiplication names a triple") {
    GroundSet two({"0", "1"});
    std::vector<std::vector<int>> add{{0, 1}, {1, 0}};
    std::vector<std::vector<int>> mul{{0, 1}, {0, 0}};
    std::string message =
        test::input_error_message([&] { FiniteRing::validate(two, add, mul); });
    CHECK((test::message_contains(message, "associative") ||
           test::message_contains(message, "distributivity")));
  }
  SUBCASE("shape and range errors") {
    CHECK_THROWS_AS(FiniteRing::validate(g, {{0, 1}}, example34_mul()), InputError);
    auto mul = example34_mul();
    mul[2][2] = 9;
    CHECK_THROWS_AS(FiniteRing::validate(g, example34_add(), mul), InputError);
  }
  SUBCASE("missing additive identity") {
    GroundSet two({"0", "1"});
    // x+y := 1 constant: commutative, associative, but no identity.
    std::vector<std::vector<int>> add{{1, 1}, {1, 1}};
    std::vector<std::vector<int>> mul{{0, 0}, {0, 0}};
    std::string message =
        test::input_error_message([&] { FiniteRing::validate(two, add, mul); });
    CHECK(test::message_contains(message, "identity"));
  }
}

TEST_CASE("set arithmetic on the fixture ring") {
  FiniteRing r = catalog_example34();
  CHECK(r.set_add(ms({0}), ms({2})) == ms({2}));          // {a}+{c} = {c}
  CHECK(r.set_add(ms({0}), ms({1, 2, 3})) == ms({1, 2, 3}));  // 0+A = A
  CHECK(r.set_add(ms({0, 1}), ms({0, 3})) == ms({0, 1, 3}));  // b+d = a
  CHECK(r.translate(1, ms({0, 1})) == ms({1, 2}));        // b+a=b, b+b=c
  CHECK(r.translate(0, ms({1, 3})) == ms({1, 3}));
  CHECK(r.set_neg(ms({1})) == ms({3}));                   // -b = d
}

TEST_CASE("scaling in Z4") {
  FiniteRing z4 = catalog_zn(4);
  CHECK(z4.scale_left(3, ms({1, 2})) == ms({3, 2}));  // 3·1=3, 3·2=2
  CHECK(z4.scale_right(ms({1, 2}), 3) == ms({3, 2}));
  CHECK(z4.scale_left(0, ms({1, 2, 3})) == ms({0}));
  CHECK(z4.set_mul(ms({1, 3}), ms({2})) == ms({2}));
}

TEST_CASE("set arithmetic laws") {
  for (const FiniteRing& r : {catalog_example34(), catalog_zn(5)}) {
    const Mask full = r.ground().full();
    for (Mask a = 0; a <= full; ++a) {
      CHECK(r.set_neg(r.set_neg(a)) == a);
      for (int x = 0; x < r.size(); ++x) {
        CHECK(r.translate(x, r.translate(r.neg(x), a)) == a);
      }
      for (Mask b = 0; b <= full; ++b) {
        CHECK(r.set_add(a, b) == r.set_add(b, a));
      }
    }
  }
}

TEST_CASE("fixture ring products stay inside {a,c}") {
  FiniteRing r = catalog_example34();
  for (Mask a = 0; a <= 0xF; ++a) {
    for (Mask b = 0; b <= 0xF; ++b) {
      CHECK(mask_subset(r.set_mul(a, b), ms({0, 2})));
    }
  }
}

TEST_CASE("homomorphism checks") {
  FiniteRing z4 = catalog_zn(4);

  SUBCASE("identity is a homomorphism") {
    CHECK(is_homomorphism({0, 1, 2, 3}, z4, z4));
  }
  SUBCASE("constant zero map is a homomorphism") {
    CHECK(is_homomorphism({0, 0, 0, 0}, z4, catalog_zn(2)));
  }
  SUBCASE("shift by one fails at (0,0)") {
    auto violation = hom_violation({1, 2, 3, 0}, z4, z4);
    REQUIRE(violation.has_value());
    CHECK(violation->op == "add");
    CHECK(violation->x == 0);
    CHECK(violation->y == 0);
  }
  SUBCASE("RingHom::validate accepts and rejects accordingly") {
    RingHom hom = RingHom::validate(z4, z4, {0, 1, 2, 3});
    CHECK(hom(2) == 2);
    CHECK_THROWS_AS(RingHom::validate(z4, z4, {1, 2, 3, 0}), InputError);
    CHECK_THROWS_AS(RingHom::validate(z4, z4, {0, 1}), InputError);
  }
}

TEST_CASE("catalog entries") {
  SUBCASE("example34 reproduces the fixture tables exactly") {
    FiniteRing r = catalog_example34();
    CHECK(r.ground().labels() == std::vector<std::string>{"a", "b", "c", "d"});
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        CHECK(r.add(x, y) == example34_add()[x][y]);
        CHECK(r.mul(x, y) == example34_mul()[x][y]);
      }
    }
  }
  SUBCASE("product of Z2 and Z2") {
    FiniteRing r = catalog("product", {2, 2});
    CHECK(r.size() == 4);
    REQUIRE(r.unity().has_value());
    CHECK(r.ground().label(*r.unity()) == "(1,1)");
    CHECK(r.units() == mask_bit(*r.unity()));
  }
  SUBCASE("dispatcher errors") {
    CHECK_THROWS_AS(catalog("nope", {}), InputError);
    CHECK_THROWS_AS(catalog("zn", {}), InputError);
    CHECK_THROWS_AS(catalog("zn", {0}), InputError);
    CHECK_THROWS_AS(catalog("example34", {4}), InputError);
    CHECK_THROWS_AS(catalog("product", {2}), InputError);
  }
}

TEST_CASE("units have unique inverses and exist iff unity does") {
  for (int n = 1; n <= 8; ++n) {
    FiniteRing r = catalog_zn(n);
    CHECK((r.units() != 0) == r.unity().has_value());
    if (!r.unity()) continue;
    for (int x : r.unit_elements()) {
      int inverses = 0;
      for (int y = 0; y < r.size(); ++y) {
        if (r.mul(x, y) == *r.unity() && r.mul(y, x) == *r.unity()) ++inverses;
      }
      CHECK(inverses == 1);
    }
  }
  CHECK(catalog_example34().units() == 0);
  CHECK_FALSE(catalog_example34().unity().has_value());
}
