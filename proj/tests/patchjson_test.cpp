#include <doctest.h>

#include "peeltri/code.hpp"
#include "peeltri/patchjson.hpp"

using namespace peeltri::map;
using nlohmann::json;

namespace {
void roundtrip(const TriComplex& t) {
  TriComplex back = from_patch_json(to_patch_json(t));
  CHECK(canonical_code(back) == canonical_code(t));
}
}  // namespace

TEST_CASE("patch json round-trips") {
  roundtrip(TriComplex::build(1, {}, {0, 0, true}));
  roundtrip(TriComplex::build(1, {}, {0, 0, true}, {{0}, {1}, {2}}));
  roundtrip(TriComplex::build(2, {{0, 3}, {1, 5}, {2, 4}}, {1, 2, false}));
  roundtrip(TriComplex::single_vertex());
  roundtrip(TriComplex::single_edge());
  roundtrip(TriComplex::vertex_loop());
}

TEST_CASE("patch json shape") {
  json j = to_patch_json(TriComplex::build(2, {{0, 3}}, {0, 0, true}));
  CHECK(j["faces"] == 2);
  CHECK(j["gluings"].size() == 1);
  CHECK(j["root"] == json::array({0, 0, true}));
  json s = to_patch_json(TriComplex::single_edge());
  CHECK(s["sentinel"] == "T20");
}

TEST_CASE("bad patches are rejected") {
  CHECK_THROWS(from_patch_json(json::parse(R"({"faces": 1})")));
  CHECK_THROWS(
      from_patch_json(json::parse(R"({"faces": 1, "gluings": [[[0,0],[0,0]]], "root": [0,0,true]})")));
}
