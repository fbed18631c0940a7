#include <catch_amalgamated.hpp>

#include "specker/laws.hpp"
#include "specker/limits.hpp"
#include "specker/universe.hpp"

using namespace specker;

namespace {
MultiSpace pt(const char* label, std::uint64_t m) { return new_space({label}, {m}); }
const auto& apexes() {
  static const auto a = laws::default_test_apexes();
  return a;
}
}  // namespace

TEST_CASE("limit examples") {
  const auto p = limit(product_diagram(pt("a", 2), pt("b", 3)));
  REQUIRE(p.apex.size() == 1);
  CHECK(p.apex.mult(0) == 6);
  CHECK(p.apex.label(0) == "(a,b)");

  const auto t = terminal();
  REQUIRE(t.apex.size() == 1);
  CHECK(t.apex.mult(0) == 1);
  CHECK(t.legs.empty());

  const auto x = new_space({"x1", "x2"}, {2, 2});
  const auto y = new_space({"y", "y'"}, {2, 1});
  const auto f = new_morphism(x, y, {{"x1", "y"}, {"x2", "y"}});
  const auto g = new_morphism(x, y, {{"x1", "y"}, {"x2", "y'"}});
  const auto e = equalizer(f, g);
  CHECK(e.apex == pt("x1", 2));
  REQUIRE(cone_isomorphism(e, limit(equalizer_diagram(f, g))));
}

TEST_CASE("products, pullbacks, equalizers") {
  const auto ab = new_space({"a", "b"}, {1, 2});
  const auto p = product(ab, ab);
  CHECK(p.apex == new_space({"(a,a)", "(a,b)", "(b,a)", "(b,b)"}, {1, 2, 2, 2}));

  const auto z = pt("z", 1);
  const auto x = new_space({"x1", "x2"}, {2, 3});
  const auto y = new_space({"y1"}, {4});
  const auto pb = pullback(new_morphism(x, z, {{"x1", "z"}, {"x2", "z"}}), new_morphism(y, z, {{"y1", "z"}}));
  CHECK(pb.apex.size() == 2);
  CHECK(pb.apex.mult(0) == 4);
  CHECK(pb.apex.mult(1) == 12);
  CHECK(cone_isomorphism(Cone{pb.apex, {pb.legs[0], pb.legs[1]}}, product(x, y)));

  const auto f = new_morphism(x, z, {{"x1", "z"}, {"x2", "z"}});
  CHECK(equalizer(f, f).apex == x);

  CHECK_THROWS_AS(equalizer(f, new_morphism(y, z, {{"y1", "z"}})), structure_error);
}

TEST_CASE("LCM overflow is reported") {
  const auto big = new_space({"a"}, {4294967311ull});
  const auto other = new_space({"b"}, {4294967357ull});
  CHECK_THROWS_AS(product(big, other), overflow_error);
}

TEST_CASE("coproducts") {
  const auto c = coproduct(pt("a", 1), pt("a", 2));
  CHECK(c.apex == new_space({"L:a", "R:a"}, {1, 2}));
  for (const auto& leg : c.legs)
    for (auto z : leg.zetas()) CHECK(z == 1);
  const auto ab = new_space({"a", "b"}, {1, 2});
  const auto ce = coproduct(ab, MultiSpace());
  CHECK(ce.apex == new_space({"L:a", "L:b"}, {1, 2}));
  CHECK(initial().empty());
  CHECK(verify_couniversal(c, product_diagram(pt("a", 1), pt("a", 2)), apexes()).ok());
}

TEST_CASE("verify_universal examples") {
  const auto x = new_space({"a", "b"}, {1, 2});
  const auto y = pt("c", 3);
  const auto d = product_diagram(x, y);
  const auto p = product(x, y);
  const auto r = verify_universal(p, d, apexes());
  CHECK(r.ok());
  CHECK(r.apexes == 43);
  CHECK(r.cones > 0);

  // Doubling one apex multiplicity keeps a cone but loses existence.
  std::vector<std::uint64_t> mults(p.apex.mults().begin(), p.apex.mults().end());
  mults[0] *= 2;
  const MultiSpace fat(std::vector<std::string>(p.apex.labels().begin(), p.apex.labels().end()), mults);
  Cone bad{fat, {}};
  for (const auto& leg : p.legs) bad.legs.emplace_back(fat, leg.cod(), std::vector<std::size_t>(leg.gamma().begin(), leg.gamma().end()));
  const auto rb = verify_universal(bad, d, apexes());
  CHECK(rb.uniqueness_failures == 0);
  CHECK(rb.existence_failures > 0);

  const auto rt = verify_universal(terminal(), Diagram(), apexes());
  CHECK(rt.ok());
  CHECK(rt.cones == apexes().size());
}

// Every diagram with <= 2 objects and <= 2 arrows (parallel, or endo).
TEST_CASE("limit is universal on small diagrams") {
  const auto spaces = all_spaces(2, std::vector<std::uint64_t>{1, 2});
  const auto small_apexes = all_spaces(2, std::vector<std::uint64_t>{1, 2, 4});
  std::size_t diagrams = 0;
  for (const auto& x : spaces) {
    for (const auto& f : enumerate_homs(x, x)) {
      const Diagram d({x}, {Arrow{0, 0, f}});
      CHECK(verify_universal(limit(d), d, small_apexes).ok());
      ++diagrams;
    }
    for (const auto& y : spaces) {
      const auto homs = enumerate_homs(x, y);
      const Diagram d0({x, y}, {});
      CHECK(verify_universal(limit(d0), d0, small_apexes).ok());
      for (std::size_t i = 0; i < homs.size(); ++i) {
        const Diagram d1({x, y}, {Arrow{0, 1, homs[i]}});
        CHECK(verify_universal(limit(d1), d1, small_apexes).ok());
        for (std::size_t j = i; j < homs.size(); ++j) {
          const Diagram d2({x, y}, {Arrow{0, 1, homs[i]}, Arrow{0, 1, homs[j]}});
          const auto l = limit(d2);
          CHECK(verify_universal(l, d2, small_apexes).ok());
          const auto e = equalizer(homs[i], homs[j]);
          CHECK(cone_isomorphism(Cone{l.apex, {l.legs[0]}}, Cone{e.apex, {e.legs[0]}}).has_value());
          ++diagrams;
        }
      }
    }
  }
  CHECK(diagrams > 100);
}

TEST_CASE("multiplicity law: apex values are LCMs and divisible by every component") {
  const auto spaces = all_spaces(2, std::uint64_t{4});
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const auto c = limit(product_diagram(x, y));
      for (std::size_t i = 0; i < c.apex.size(); ++i) {
        const auto a = x.mult(c.legs[0].image(i));
        const auto b = y.mult(c.legs[1].image(i));
        CHECK(c.apex.mult(i) == std::lcm(a, b));
        CHECK(c.apex.mult(i) % a == 0);
        CHECK(c.apex.mult(i) % b == 0);
      }
    }
}

TEST_CASE("algebra-side products and coproducts") {
  const auto z1 = S_obj(pt("a", 1));
  const auto z2 = S_obj(pt("b", 2));
  const auto gp = uslg_product(z1, z2);
  CHECK(unit(gp.object) == GroupElement(gp.object, {1, 2}));
  const auto gc = uslg_coproduct(S_obj(pt("a", 2)), S_obj(pt("b", 3)));
  REQUIRE(gc.object.dimension() == 1);
  CHECK(gc.object.base().mult(0) == 6);
  const auto g = S_obj(new_space({"a", "b"}, {1, 3}));
  const auto with_trivial = uslg_product(g, S_obj(MultiSpace()));
  CHECK(is_lhom_isomorphism(with_trivial.proj_left));
  CHECK(unit(with_trivial.object).values()[1] == 3);
}
