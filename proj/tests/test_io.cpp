#include <catch_amalgamated.hpp>

#include "specker/io.hpp"
#include "specker/universe.hpp"

using namespace specker;
using specker::io::json;

TEST_CASE("space round trip") {
  for (const auto& x : all_spaces(2, std::uint64_t{3})) {
    const auto j = io::to_json(x);
    CHECK(io::space_from_json(j) == x);
    CHECK(io::to_json(io::space_from_json(json::parse(j.dump()))) == j);
  }
}

TEST_CASE("space reader is strict") {
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"points":[{"label":"a"}]})")), structure_error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"points":[{"label":"a","mult":0}]})")), structure_error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"points":[{"label":"a","mult":-2}]})")), structure_error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"points":[{"label":"a","mult":1.5}]})")), structure_error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"points":[],"extra":1})")), structure_error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"points":{}})")), structure_error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"([1,2])")), structure_error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"points":[{"label":"a","mult":1},{"label":"a","mult":2}]})")),
                  structure_error);
  CHECK(io::space_from_json(json::parse(R"({"points":[]})")).size() == 0);
}

TEST_CASE("morphism round trip and errors") {
  const auto x = new_space({"x"}, {4});
  const auto y = new_space({"v"}, {2});
  const auto homs = enumerate_homs(x, y);
  REQUIRE(homs.size() == 1);
  const auto j = io::to_json(homs[0]);
  CHECK(io::morphism_from_json(j) == homs[0]);
  CHECK(io::to_json(io::morphism_from_json(j)) == j);

  auto bad = j;
  bad["dom"]["points"][0]["mult"] = 3;
  CHECK_THROWS_AS(io::morphism_from_json(bad), domain_error);
  auto unknown = j;
  unknown["map"]["zz"] = "v";
  CHECK_THROWS_AS(io::morphism_from_json(unknown), structure_error);
  auto missing = j;
  missing["map"] = json::object();
  CHECK_THROWS(io::morphism_from_json(missing));
}

TEST_CASE("group, element and homomorphism round trip") {
  const auto x = new_space({"a", "b"}, {2, 3});
  const SpeckerGroup g(x);
  CHECK(io::group_from_json(io::to_json(g)) == g);
  CHECK(io::group_from_json(io::to_json(x)) == g);
  const GroupElement e(g, {-1, 5});
  CHECK(io::element_from_json(io::to_json(e)) == e);

  for (const auto& f : enumerate_homs(x, new_space({"s", "t"}, {1, 3}))) {
    const auto h = S_mor(f);
    CHECK(io::lhom_from_json(io::to_json(h)) == h);
  }
  // Into the trivial group the matrix has no rows.
  const auto empty = S_mor(BmsMorphism::identity(MultiSpace({}, {})));
  CHECK(io::lhom_from_json(json::parse(io::to_json(empty).dump())) == empty);

  auto j = io::to_json(S_mor(BmsMorphism::identity(x)));
  j["matrix"][0][0] = 2;
  CHECK_THROWS(io::lhom_from_json(j));
  CHECK_THROWS_AS(io::element_from_json(json::parse(R"({"group":{"space":{"points":[]}},"values":["1"]})")), structure_error);
}

TEST_CASE("diagram round trip") {
  const auto x = new_space({"p", "q"}, {2, 4});
  const auto z = new_space({"s", "t"}, {1, 2});
  const auto fs = enumerate_homs(x, z);
  REQUIRE_FALSE(fs.empty());
  const Diagram d({x, z}, {Arrow{0, 1, fs[0]}});
  const auto j = io::to_json(d);
  const auto back = io::diagram_from_json(j);
  CHECK(io::to_json(back) == j);
  CHECK(back.arrows()[0].morphism == fs[0]);

  auto bad = j;
  bad["arrows"][0]["target"] = 7;
  CHECK_THROWS_AS(io::diagram_from_json(bad), structure_error);
}

TEST_CASE("sequences round trip in canonical form") {
  const auto j = json::parse(R"({"prefix":[3,1,1],"tail":1})");
  const auto s = io::ecseq_from_json(j);
  CHECK(io::to_json(s) == json::parse(R"({"prefix":[3],"tail":1})"));
  CHECK(io::ecseq_from_json(io::to_json(s)) == s);
  CHECK_THROWS_AS(io::ecseq_from_json(json::parse(R"({"prefix":[],"tail":9223372036854775808})")), overflow_error);
}

TEST_CASE("report shapes") {
  const auto p = io::to_json(omega::pushout_obstruction(2));
  CHECK(p["forced"] == json::parse(R"({"inf":1,"0":2,"1":2,"2":2})"));
  CHECK(p["representable"] == false);
  const auto n = io::to_json(omega::verify_H_not_specker(0, 50, 3));
  CHECK(n["closed"] == "pass");
  CHECK(n["unit_generated"] == false);
  CHECK(n["certificate"]["tail_only"] == true);
}
