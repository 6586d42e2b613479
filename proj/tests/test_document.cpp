#include <doctest.h>

#include "ringtop/document.hpp"
#include "test_util.hpp"

using namespace ringtop;
using nlohmann::json;

namespace {

std::string fixture(const char* name) {
  return std::string(RINGTOP_FIXTURE_DIR) + "/" + name;
}

std::string test_data(const char* name) {
  return std::string(RINGTOP_TEST_DATA_DIR) + "/" + name;
}

json minimal_document() {
  return json::parse(R"({
    "elements": ["0", "1"],
    "open_sets": [[], ["0", "1"]],
    "add": [["0", "1"], ["1", "0"]],
    "mul": [["0", "0"], ["0", "1"]]
  })");
}

}  // namespace

TEST_CASE("loading the bundled fixtures") {
  SUBCASE("example34") {
    LoadedStructure loaded = load_structure_file(fixture("example34.json"));
    CHECK(loaded.structure.ring.same_tables(catalog_example34()));
    CHECK(loaded.structure.ring.name() == "example34");
    CHECK(loaded.structure.topology.opens() == std::vector<Mask>{0x0, 0x1, 0x3, 0xF});
    CHECK_FALSE(loaded.hom.has_value());
  }
  SUBCASE("z4-discrete carries a hom section onto itself") {
    LoadedStructure loaded = load_structure_file(fixture("z4-discrete.json"));
    CHECK(loaded.structure.topology.opens().size() == 16);
    CHECK(loaded.structure.ring.same_tables(catalog_zn(4)));
    REQUIRE(loaded.hom.has_value());
    CHECK(loaded.hom->map == std::vector<int>{0, 1, 2, 3});
    CHECK(loaded.hom->target == loaded.structure);
  }
  SUBCASE("z4-indiscrete") {
    LoadedStructure loaded = load_structure_file(fixture("z4-indiscrete.json"));
    CHECK(loaded.structure.topology.opens() == std::vector<Mask>{0x0, 0xF});
  }
}

TEST_CASE("round-trip: parse, serialize, parse") {
  for (const char* name : {"example34.json", "z4-discrete.json", "z4-indiscrete.json"}) {
    LoadedStructure first = load_structure_file(fixture(name));
    json serialized = structure_document(first);
    LoadedStructure second = load_structure_document(serialized);
    CHECK(first == second);
  }
}

TEST_CASE("document schema errors") {
  SUBCASE("open_sets and subbasis are mutually exclusive") {
    json doc = minimal_document();
    doc["subbasis"] = json::array();
    CHECK(test::message_contains(
        test::input_error_message([&] { load_structure_document(doc); }),
        "exactly one"));
  }
  SUBCASE("one of open_sets and subbasis is required") {
    json doc = minimal_document();
    doc.erase("open_sets");
    CHECK_THROWS_AS(load_structure_document(doc), InputError);
  }
  SUBCASE("unknown keys are rejected") {
    json doc = minimal_document();
    doc["open_set"] = json::array();
    CHECK(test::message_contains(
        test::input_error_message([&] { load_structure_document(doc); }), "open_set"));
  }
  SUBCASE("unknown labels in tables") {
    json doc = minimal_document();
    doc["add"][0][0] = "z";
    CHECK(test::message_contains(
        test::input_error_message([&] { load_structure_document(doc); }), "z"));
  }
  SUBCASE("incomplete hom map") {
    json doc = minimal_document();
    doc["hom"] = json{{"target", minimal_document()}, {"map", {{"0", "0"}}}};
    CHECK(test::message_contains(
        test::input_error_message([&] { load_structure_document(doc); }), "missing"));
  }
  SUBCASE("nested hom sections are rejected") {
    json doc = minimal_document();
    json target = minimal_document();
    target["hom"] = json{{"target", minimal_document()},
                         {"map", {{"0", "0"}, {"1", "1"}}}};
    doc["hom"] = json{{"target", target}, {"map", {{"0", "0"}, {"1", "1"}}}};
    CHECK_THROWS_AS(load_structure_document(doc), InputError);
  }
}

TEST_CASE("bad data files surface validator messages") {
  CHECK(test::message_contains(
      test::input_error_message([&] { load_structure_file(test_data("bad-topology.json")); }),
      "union"));
  CHECK(test::message_contains(
      test::input_error_message([&] { load_structure_file(test_data("bad-ring.json")); }),
      "commutative"));
  CHECK(test::message_contains(
      test::input_error_message([&] { load_structure_file("no-such-file.json"); }),
      "cannot open"));
}

TEST_CASE("subbasis documents generate their topology") {
  json doc = json::parse(R"({
    "elements": ["a", "b", "c", "d"],
    "subbasis": [["a"], ["a", "b"]],
    "add": [["a","b","c","d"],["b","c","d","a"],["c","d","a","b"],["d","a","b","c"]],
    "mul": [["a","a","a","a"],["a","c","a","c"],["a","a","a","a"],["a","c","a","c"]]
  })");
  LoadedStructure loaded = load_structure_document(doc);
  CHECK(loaded.structure.topology.opens() == std::vector<Mask>{0x0, 0x1, 0x3, 0xF});
  // Canonical serialization emits the generated open sets.
  json serialized = structure_document(loaded);
  CHECK(serialized.contains("open_sets"));
  CHECK_FALSE(serialized.contains("subbasis"));
}
