#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "flipkit/canonical.hpp"
#include "flipkit/io.hpp"
#include "support.hpp"

using namespace flipkit;

TEST_CASE("map json round trip is bit exact") {
  for (auto T : {fktest::k7_torus(), fktest::pillow()}) {
    std::string text = map_to_json(T);
    CHECK(text.back() == '\n');
    auto U = map_from_json_text(text);
    CHECK(U.same_arrays(T));
    CHECK(map_to_json(U) == text);
  }
}

TEST_CASE("map json has the documented shape") {
  auto T = fktest::tetrahedron();
  auto j = nlohmann::json::parse(map_to_json(T));
  CHECK(j["format"] == "flipkit-map-v1");
  CHECK(j["flags"] == 24);
  CHECK(j["s0"].size() == 24);
  CHECK(j["s1"].size() == 24);
  CHECK(j["s2"].size() == 24);
}

TEST_CASE("simp json round trips through the facet loader") {
  auto T = fktest::rp2_k6();
  std::string text = simp_to_json(T);
  auto j = nlohmann::json::parse(text);
  CHECK(j["format"] == "flipkit-simp-v1");
  CHECK(j["faces"].size() == 10);
  auto U = map_from_json_text(text);
  CHECK(canonical_key(U) == canonical_key(T));
}

TEST_CASE("simp export requires a regular map") {
  CHECK_THROWS_AS(simp_to_json(fktest::pillow()), Error);
}

TEST_CASE("format dispatch and bad input") {
  CHECK_THROWS_AS(map_from_json_text("not json"), Error);
  CHECK_THROWS_AS(map_from_json_text("{\"format\":\"nope\"}"), Error);
  CHECK_THROWS_AS(map_from_json_text("{}"), Error);
  try {
    map_from_json_text("{\"format\":\"flipkit-map-v1\",\"flags\":2}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadFormat);
  }
  // structurally broken involutions keep their validation code
  try {
    map_from_json_text(
        "{\"format\":\"flipkit-map-v1\",\"flags\":2,"
        "\"s0\":[0,1],\"s1\":[1,0],\"s2\":[1,0]}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FixedPoint);
  }
}

TEST_CASE("script json round trip") {
  MoveScript s;
  s.start_key = canonical_key(fktest::tetrahedron());
  s.end_key = s.start_key;
  s.all_regular = true;
  s.moves = {{MoveKind::Flip, 3},
             {MoveKind::Contract, 0},
             {MoveKind::FaceSubdivide, 7}};
  std::string text = script_to_json(s);
  CHECK(text.back() == '\n');
  auto j = nlohmann::json::parse(text);
  CHECK(j["format"] == "flipkit-script-v1");
  CHECK(j["moves"][0]["kind"] == "flip");
  CHECK(j["moves"][1]["kind"] == "contract");
  CHECK(j["moves"][2]["kind"] == "subdivide");
  CHECK(j["moves"][2]["target"] == 7);
  MoveScript r = script_from_json_text(text);
  CHECK(r.start_key == s.start_key);
  CHECK(r.end_key == s.end_key);
  CHECK(r.all_regular == s.all_regular);
  REQUIRE(r.moves.size() == 3);
  CHECK(r.moves[0].kind == MoveKind::Flip);
  CHECK(r.moves[0].target == 3);
  CHECK(script_to_json(r) == text);
}

TEST_CASE("certificate json carries the strategy") {
  EquivalenceCertificate c;
  c.script.start_key = canonical_key(fktest::octahedron());
  c.script.end_key = c.script.start_key;
  c.script.all_regular = true;
  c.script.moves = {{MoveKind::Flip, 0}, {MoveKind::Flip, 0}};
  c.strategy = {{"direct-bfs", 2}};
  std::string text = certificate_to_json(c);
  auto j = nlohmann::json::parse(text);
  CHECK(j["strategy"][0]["tag"] == "direct-bfs");
  CHECK(j["strategy"][0]["moves"] == 2);
  auto r = certificate_from_json_text(text);
  REQUIRE(r.strategy.size() == 1);
  CHECK(r.strategy[0].tag == "direct-bfs");
  CHECK(r.strategy[0].move_count == 2);
  CHECK(certificate_to_json(r) == text);
}

TEST_CASE("bad scripts are rejected with BadFormat") {
  CHECK_THROWS_AS(script_from_json_text("{\"format\":\"flipkit-script-v1\"}"),
                  Error);
  CHECK_THROWS_AS(
      script_from_json_text("{\"format\":\"flipkit-script-v1\","
                            "\"start_key\":\"xx\",\"end_key\":\"\","
                            "\"all_regular\":true,\"moves\":[]}"),
      Error);
  CHECK_THROWS_AS(
      script_from_json_text("{\"format\":\"flipkit-script-v1\","
                            "\"start_key\":\"18\",\"end_key\":\"18\","
                            "\"all_regular\":true,"
                            "\"moves\":[{\"kind\":\"warp\",\"target\":0}]}"),
      Error);
}

TEST_CASE("file round trip") {
  auto T = fktest::octahedron();
  std::string path = "io_roundtrip_tmp.json";
  write_text_file(path, map_to_json(T));
  auto U = load_map_file(path);
  CHECK(U.same_arrays(T));
  write_text_file(path, simp_to_json(T));
  auto W = load_map_file(path);
  CHECK(canonical_key(W) == canonical_key(T));
  CHECK_THROWS_AS(load_map_file("does_not_exist.json"), Error);
  std::remove(path.c_str());
}

TEST_CASE("certificate loader accepts a bare script") {
  MoveScript s;
  s.start_key = canonical_key(fktest::tetrahedron());
  s.end_key = s.start_key;
  s.all_regular = true;
  std::string path = "io_script_tmp.json";
  write_text_file(path, script_to_json(s));
  auto c = load_certificate_file(path);
  CHECK(c.script.start_key == s.start_key);
  CHECK(c.strategy.empty());
  std::remove(path.c_str());
}
