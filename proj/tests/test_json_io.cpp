#include <functional>

#include "catalan/errors.hpp"
#include "catalan/json_io.hpp"
#include "catalan/nerve.hpp"
#include "doctest.h"

using namespace catalan;

namespace {

std::string data(const std::string& name) { return std::string(CATALAN_DATA_DIR) + "/" + name; }

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("simplicial sets round-trip bit-exactly") {
  for (const TruncatedSSet& s : {catalan_sset(4), point_sset(3), monoidal_nerve(library::two_or(), 3)}) {
    const Json j = sset_to_json(s);
    const TruncatedSSet back = sset_from_json(j);
    CHECK(back == s);
    CHECK(sset_to_json(back).dump() == j.dump());
    CHECK(sset_from_json(parse_json(j.dump(2))) == s);
  }
}

TEST_CASE("structures round-trip") {
  for (const auto& [name, m] : library::classification_library()) {
    CAPTURE(name);
    const Json j = structure_to_json(m);
    CHECK(structure_from_json(j) == m);
    CHECK(structure_to_json(structure_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("shipped structure files") {
  CHECK(structure_from_json(read_json_file(data("two.json"))) == library::two_or());
  CHECK(structure_from_json(read_json_file(data("chain3-max.json"))) == library::chain3_max());
  CHECK(structure_from_json(read_json_file(data("chain3-trunc-add.json"))) == library::chain3_trunc_add());
  CHECK(structure_from_json(read_json_file(data("antichain2.json"))) == library::antichain2());
  CHECK(structure_from_json(read_json_file(data("one-object-1z.json"))) == library::one_object_1z());
}

TEST_CASE("skew data round-trips and the shipped examples behave") {
  const SkewData two = skew_from_json(read_json_file(data("two-or.json")));
  CHECK(check_axioms(two).all_pass());
  CHECK(check_pentagons(two).all_pass());
  CHECK(skew_to_json(skew_from_json(skew_to_json(two))).dump() == skew_to_json(two).dump());

  const SkewData kz = skew_from_json(read_json_file(data("kappa-z.json")));
  REQUIRE(kz.kappa.has_value());
  CHECK(kz.base.label(*kz.kappa) == "z");
  CHECK_FALSE(check_pentagons(kz).at("A5").pass);
  CHECK(verify_equivalence(kz));

  const SkewData mn = skew_from_json(read_json_file(data("chain3-min.json")));
  CHECK(check_axioms(mn).all_pass());
  CHECK(mn.base.objects[mn.unit] == "2");
}

TEST_CASE("schema errors name the offending field") {
  CHECK(field_of([] { structure_from_json(read_json_file(data("malformed.json"))); }) == "morphisms[1].tgt");
  CHECK(field_of([] { structure_from_json(parse_json(R"({"kind":"poset"})")); }) == "schema_version");
  CHECK(field_of([] { structure_from_json(parse_json(R"({"schema_version":2,"kind":"poset"})")); }) ==
        "schema_version");
  CHECK(field_of([] { structure_from_json(parse_json(R"({"schema_version":1,"kind":"graph"})")); }) == "kind");
  CHECK(field_of([] {
          structure_from_json(parse_json(
              R"({"schema_version":1,"kind":"poset","elements":["a"],"leq":[],"tensor":{"a":{"a":"b"}},"unit":"a"})"));
        }) == "tensor.a.a");
  CHECK(field_of([] {
          structure_from_json(
              parse_json(R"({"schema_version":1,"kind":"poset","elements":["a"],"leq":[],"tensor":{"a":{}},"unit":"a"})"));
        }) == "tensor.a.a");
  CHECK(field_of([] { skew_from_json(parse_json(R"({"schema_version":1,"kind":"skew"})")); }) == "category");
  CHECK(field_of([] { parse_json("{\n  \"a\": ,\n}"); }) == "line 2, column 8");
  CHECK_THROWS_AS(read_json_file(data("does-not-exist.json")), SchemaError);
}

TEST_CASE("poset documents are validated") {
  const char* not_monotone = R"({"schema_version":1,"kind":"poset","elements":["a","b"],"leq":[["a","b"]],
    "tensor":{"a":{"a":"a","b":"a"},"b":{"a":"a","b":"a"}},"unit":"a"})";
  CHECK_THROWS_AS(structure_from_json(parse_json(not_monotone)), SchemaError);
}
