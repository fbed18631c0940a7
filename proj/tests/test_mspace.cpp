#include <catch_amalgamated.hpp>

#include <set>

#include "specker/mspace.hpp"
#include "specker/universe.hpp"

using namespace specker;

namespace {
MultiSpace pt(const char* label, std::uint64_t m) { return new_space({label}, {m}); }
}  // namespace

TEST_CASE("new_space builds spaces and rejects bad input") {
  const auto ab = new_space({"a", "b"}, {1, 2});
  CHECK(ab.size() == 2);
  CHECK(ab.mult(ab.index_of("b")) == 2);
  CHECK(new_space({}, {}).empty());
  const auto terminal = new_space({"p"}, {1});
  CHECK(terminal.size() == 1);
  CHECK(terminal.mult(0) == 1);

  CHECK_THROWS_AS(new_space({"a", "a"}, {1, 1}), structure_error);
  CHECK_THROWS_AS(new_space({"a"}, {0}), structure_error);
  CHECK_THROWS_AS(new_space({"a", "b"}, {1}), structure_error);
  CHECK_THROWS_AS(Multiplicity(0), structure_error);
}

TEST_CASE("equality is structural and order matters") {
  CHECK(new_space({"a", "b"}, {1, 2}) == new_space({"a", "b"}, {1, 2}));
  CHECK_FALSE(new_space({"a", "b"}, {1, 2}) == new_space({"b", "a"}, {2, 1}));
  CHECK_FALSE(new_space({"a"}, {1}) == new_space({"a"}, {2}));
}

TEST_CASE("new_morphism computes zeta and checks divisibility") {
  const auto m = new_morphism(pt("x", 4), pt("v", 2), {{"x", "v"}});
  CHECK(m.zeta(0) == 2);

  try {
    new_morphism(pt("x", 1), pt("v", 2), {{"x", "v"}});
    FAIL("expected a divisibility error");
  } catch (const divisibility_error& e) {
    CHECK(e.point() == "x");
    CHECK(e.dom_mult() == 1);
    CHECK(e.cod_mult() == 2);
  }
  CHECK_THROWS_AS(new_morphism(pt("x", 1), pt("v", 1), {{"x", "w"}}), structure_error);
  CHECK_THROWS_AS(new_morphism(pt("x", 1), pt("v", 1), {}), structure_error);
  CHECK_THROWS_AS(new_morphism(pt("x", 1), pt("v", 1), {{"x", "v"}, {"y", "v"}}), structure_error);

  const auto id = BmsMorphism::identity(new_space({"a", "b"}, {3, 5}));
  for (auto z : id.zetas()) CHECK(z == 1);
}

TEST_CASE("composition multiplies zeta") {
  const auto f = new_morphism(pt("x", 4), pt("v", 2), {{"x", "v"}});
  const auto g = new_morphism(pt("v", 2), pt("w", 1), {{"v", "w"}});
  const auto fg = compose(f, g);
  CHECK(fg.zeta(0) == 4);
  CHECK(fg.label_map().at("x") == "w");
  CHECK(compose(f, BmsMorphism::identity(f.cod())) == f);
  CHECK_THROWS_AS(compose(f, f), structure_error);
}

TEST_CASE("isomorphism test") {
  const auto two = new_space({"a", "b"}, {3, 3});
  CHECK(is_isomorphism(BmsMorphism::identity(two)));
  CHECK_FALSE(is_isomorphism(new_morphism(pt("x", 4), pt("v", 2), {{"x", "v"}})));
  const auto swap = new_morphism(two, two, {{"a", "b"}, {"b", "a"}});
  CHECK(is_isomorphism(swap));
  CHECK(compose(swap, inverse(swap)) == BmsMorphism::identity(two));
  CHECK_THROWS_AS(inverse(new_morphism(pt("x", 4), pt("v", 2), {{"x", "v"}})), domain_error);
}

TEST_CASE("enumerate_homs examples") {
  const auto x2 = pt("x", 2);
  const auto y12 = new_space({"y1", "y2"}, {1, 2});
  CHECK(enumerate_homs(x2, y12).size() == 2);
  CHECK(enumerate_homs(y12, x2).empty());
  CHECK(enumerate_homs(MultiSpace(), y12).size() == 1);
  CHECK(enumerate_homs(MultiSpace(), MultiSpace()).size() == 1);
  CHECK(enumerate_homs(x2, MultiSpace()).empty());
}

// Independent oracle: count all |Y|^|X| functions and keep those that divide.
TEST_CASE("enumerate_homs matches a naive count and is ordered, complete, duplicate-free") {
  const auto spaces = all_spaces(3, std::uint64_t{4});
  for (std::size_t i = 0; i < spaces.size(); i += 7)
    for (std::size_t j = 0; j < spaces.size(); j += 5) {
      const auto& x = spaces[i];
      const auto& y = spaces[j];
      std::size_t expected = 0;
      std::size_t total = 1;
      for (std::size_t k = 0; k < x.size(); ++k) total *= y.size();
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        bool ok = true;
        for (std::size_t k = 0; k < x.size(); ++k) {
          ok = ok && x.mult(k) % y.mult(c % y.size()) == 0;
          c /= y.size();
        }
        expected += ok;
      }
      const auto homs = enumerate_homs(x, y);
      REQUIRE(homs.size() == expected);
      std::set<std::vector<std::size_t>> seen;
      std::vector<std::size_t> prev;
      for (const auto& h : homs) {
        std::vector<std::size_t> g(h.gamma().begin(), h.gamma().end());
        CHECK(seen.insert(g).second);
        if (!prev.empty()) CHECK(prev < g);
        prev = g;
      }
    }
}

TEST_CASE("test universe sizes") {
  CHECK(all_spaces(3, std::uint64_t{4}).size() == 1 + 4 + 16 + 64);
  CHECK(all_spaces(2, std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}).size() == 43);
  CHECK(all_spaces(0, std::uint64_t{4}).size() == 1);
}
