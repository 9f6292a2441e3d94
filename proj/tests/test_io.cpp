#include <catch2/catch.hpp>

#include <random>

#include "catcw/io.hpp"
#include "generators.hpp"

using namespace catcw;

namespace {

std::string parse_error(std::string const& text) {
  try {
    (void)io::presentation_from_json(io::parse(text, "input.json"));
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("presentation json is bit-exact") {
  std::string const text = R"({
  "objects": [
    "*"
  ],
  "generators": [
    {
      "name": "a",
      "src": "*",
      "dst": "*"
    }
  ],
  "relations": [
    {
      "lhs": {
        "at": "*",
        "gens": [
          "a",
          "a"
        ]
      },
      "rhs": {
        "at": "*",
        "gens": []
      }
    }
  ],
  "invertible": [
    "a"
  ]
}
)";
  auto c = io::presentation_from_json(io::parse(text));
  CHECK(c == presentations::cyclic(2));
  CHECK(io::dump(io::to_json(c)) == text);
}

TEST_CASE("presentations round-trip") {
  std::mt19937 rng(53);
  for (int i = 0; i < 30; ++i) {
    auto c = gen::random_presentation(rng);
    auto j = io::to_json(c);
    auto back = io::presentation_from_json(io::parse(io::dump(j)));
    CHECK(back == c);
    CHECK(io::dump(io::to_json(back)) == io::dump(j));
  }
}

TEST_CASE("parse errors carry context") {
  CHECK_THAT(parse_error("{\"objects\": [\"x\",]}"),
             Catch::Contains("input.json") && Catch::Contains("line 1"));
  CHECK_THAT(parse_error(R"({"objects": ["x"], "generators": [{"name": "f", "src": "x"}]})"),
             Catch::Contains("presentation.generators[0]") &&
                 Catch::Contains("'dst'"));
  CHECK_THAT(parse_error(R"({"objects": ["x", 3], "generators": []})"),
             Catch::Contains("presentation.objects[1]"));
  CHECK_THAT(parse_error(R"({"objects": ["x"], "generators": [],
      "relations": [{"lhs": {"gens": []}, "rhs": {"at": "x", "gens": []}}]})"),
             Catch::Contains("relations[0].lhs"));
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), Error);
}

TEST_CASE("functor json") {
  auto z = share(presentations::integers());
  auto c2 = share(presentations::cyclic(2));
  auto f = make_functor(z, c2, {{"*", "*"}}, {{"a", {"", {"a"}}}});
  auto j = io::to_json(f);
  CHECK(j["generators"].size() == 2);
  auto back = io::functor_from_json(j, z, c2);
  CHECK(back.object_map == f.object_map);
  CHECK(back.generator_map == f.generator_map);

  io::Json bad = j;
  bad["generators"]["a"]["gens"] = {"b"};
  try {
    (void)io::functor_from_json(bad, z, c2);
    FAIL("unknown generator accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK_THAT(e.what(), Catch::Contains("functor.generators.a"));
  }
}

TEST_CASE("groupoid presentations and spaces round-trip") {
  GroupoidPresentation g{{{{"t"}, {"a", "b"}, {{"a", "b", "a^-1", "b^-1"}}},
                          {{}, {}, {}}}};
  auto j = io::to_json(g);
  CHECK(io::groupoid_presentation_from_json(io::parse(io::dump(j))) == g);
  CHECK(io::dump(j).find("\"extra_objects\"") != std::string::npos);

  auto x = spaces::sierpinski();
  auto sj = io::to_json(x);
  CHECK(io::dump(sj) == io::dump(io::to_json(io::space_from_json(sj))));
  CHECK(io::space_from_json(sj) == x);
  CHECK_THROWS_AS(io::space_from_json(io::parse(R"({"points": ["u"], "opens": [["u"]]})")),
                  Error);
}

TEST_CASE("k0 witnesses re-serialize bit-identically") {
  for (auto const& c : {presentations::discrete({"x", "y"}), presentations::arrow(),
                        presentations::cyclic(2), presentations::integers()}) {
    auto w = k0_vanishing_witness(pointed(share(c)));
    auto text = io::dump(io::to_json(w));
    auto back = io::k0_witness_from_json(io::parse(text));
    CHECK_FALSE(k0_defect(back));
    CHECK(io::dump(io::to_json(back)) == text);
  }
}

TEST_CASE("tampered witnesses are rejected") {
  auto w = k0_vanishing_witness(pointed(share(presentations::discrete({"x", "y"}))));
  auto j = io::to_json(w);

  auto swapped = j;
  swapped["first"]["comparison"]["backward"]["generators"]["L.x->y"]["gens"] = {
      "L.x->y^-1"};
  CHECK(k0_defect(io::k0_witness_from_json(swapped)));

  auto wrong_cone = j;
  wrong_cone["stages"][1]["presentation"] = io::to_json(presentations::arrow());
  CHECK_THROWS_AS(io::k0_witness_from_json(wrong_cone), Error);

  auto bad_cert = j;
  bad_cert["contract_PX"]["fully_faithful"][0]["image"] = io::Json::array();
  CHECK(k0_defect(io::k0_witness_from_json(bad_cert)));
}
