#include <catch_amalgamated.hpp>

#include <set>

#include "specker/duality.hpp"
#include "specker/limits.hpp"
#include "specker/mv.hpp"
#include "specker/universe.hpp"

using namespace specker;

namespace {
SpeckerMV alg(std::vector<std::uint64_t> u) {
  auto labels = point_labels(u.size());
  return SpeckerMV(SpeckerGroup(MultiSpace(std::move(labels), std::move(u))));
}
GroupElement el(const SpeckerMV& a, std::vector<std::int64_t> v) { return GroupElement(a.group(), std::move(v)); }
}  // namespace

TEST_CASE("gamma cardinalities") {
  CHECK(enumerate_elements(alg({1})).size() == 2);
  CHECK(is_boolean_algebra(alg({1})));
  for (std::uint64_t n = 1; n <= 5; ++n) CHECK(enumerate_elements(alg({n})).size() == n + 1);
  CHECK(enumerate_elements(alg({1, 2})).size() == 6);
  CHECK(cardinality(alg({1, 2})) == 6);
  CHECK(cardinality(alg({})) == 1);
}

TEST_CASE("MV operations") {
  const auto a = alg({2});
  const auto u = unit(a.group());
  CHECK(mv_plus(a, u, u) == u);
  CHECK(mv_neg(a, mv_zero(a)) == u);
  CHECK(mv_plus(a, el(a, {1}), el(a, {1})) == el(a, {2}));
  CHECK_THROWS_AS(mv_plus(a, el(a, {3}), u), domain_error);
  CHECK_THROWS_AS(mv_neg(a, el(a, {-1})), domain_error);
  CHECK_THROWS_AS(mv_plus(a, u, unit(alg({3}).group())), structure_error);
}

TEST_CASE("MV axioms") {
  CHECK(verify_mv_axioms(alg({1})).pass());
  const auto chain = verify_mv_axioms(alg({3}));
  CHECK(chain.pass());
  CHECK(chain.tuples_checked == 64);
  const auto r = verify_mv_axioms(alg({1, 2}));
  CHECK(r.pass());
  CHECK(r.tuples_checked == 216);
  CHECK(verify_mv_axioms_by_fibers(alg({1, 2, 2, 3})).pass());
}

// The MV identity for x and y, and the sum recomputed pointwise, without
// the operation tables.
TEST_CASE("tables agree with direct evaluation") {
  const auto a = alg({2, 1});
  const auto elems = enumerate_elements(a);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const auto lhs = mv_plus(a, x, mv_neg(a, mv_plus(a, x, mv_neg(a, y))));
      const auto rhs = mv_plus(a, y, mv_neg(a, mv_plus(a, y, mv_neg(a, x))));
      CHECK(lhs == rhs);
      // x (+) y recomputed pointwise.
      for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(mv_plus(a, x, y)[i] == std::min<std::int64_t>(x[i] + y[i], unit(a.group())[i]));
    }
}

TEST_CASE("fiber decomposition") {
  const auto a = SpeckerMV(SpeckerGroup(new_space({"a", "b"}, {1, 2})));
  const auto f = fiber_decomposition(a);
  REQUIRE(f.size() == 2);
  CHECK(f[0].points == std::vector<std::size_t>{0});
  CHECK(f[0].n == 1);
  CHECK(f[1].points == std::vector<std::size_t>{1});
  CHECK(f[1].n == 2);
  CHECK(fiber_cardinality(f) == 6);

  const auto c = alg({3, 3, 3});
  const auto fc = fiber_decomposition(c);
  REQUIRE(fc.size() == 1);
  CHECK(fiber_cardinality(fc) == 64);
  CHECK(enumerate_elements(c).size() == 64);

  CHECK(fiber_decomposition(alg({})).empty());
  CHECK(fiber_cardinality({}) == 1);
}

TEST_CASE("gamma_mor restricts an l-homomorphism") {
  const auto x = new_space({"a", "b"}, {2, 1});
  const auto y = new_space({"s"}, {1});
  for (const auto& f : enumerate_homs(x, y)) {
    const auto h = gamma_mor(S_mor(f));
    CHECK(verify_mv_hom(h));
    CHECK_THROWS_AS(h(GroupElement(h.dom().group(), {2})), domain_error);
  }
}

// Every map Gamma(S(Y)) -> Gamma(S(X)) preserving (+), not and 0, found by
// exhaustive search over all functions, is gamma_mor(S_mor(f)) for some f.
TEST_CASE("MV homomorphisms between algebras of <= 6 elements all come from morphisms") {
  std::vector<MultiSpace> spaces;
  for (const auto& s : all_spaces(2, std::uint64_t{5}))
    if (cardinality(SpeckerMV(SpeckerGroup(s))) <= 6) spaces.push_back(s);
  std::size_t pairs = 0;
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const SpeckerMV dom(S_obj(y));
      const SpeckerMV cod(S_obj(x));
      const auto de = enumerate_elements(dom);
      const auto ce = enumerate_elements(cod);
      std::set<std::vector<std::size_t>> from_morphisms;
      for (const auto& f : enumerate_homs(x, y)) {
        const auto h = gamma_mor(S_mor(f));
        std::vector<std::size_t> table;
        for (const auto& e : de) table.push_back(std::find(ce.begin(), ce.end(), h(e)) - ce.begin());
        from_morphisms.insert(table);
      }
      std::set<std::vector<std::size_t>> all_homs;
      std::vector<std::size_t> t(de.size(), 0);
      while (true) {
        bool ok = ce[t[0]] == mv_zero(cod);
        for (std::size_t i = 0; i < de.size() && ok; ++i) {
          ok = ce[t[std::find(de.begin(), de.end(), mv_neg(dom, de[i])) - de.begin()]] == mv_neg(cod, ce[t[i]]);
          for (std::size_t j = 0; j < de.size() && ok; ++j) {
            const auto k = std::find(de.begin(), de.end(), mv_plus(dom, de[i], de[j])) - de.begin();
            ok = ce[t[k]] == mv_plus(cod, ce[t[i]], ce[t[j]]);
          }
        }
        if (ok) all_homs.insert(t);
        std::size_t i = t.size();
        while (i > 0 && t[i - 1] + 1 == ce.size()) t[--i] = 0;
        if (i == 0) break;
        ++t[i - 1];
      }
      CHECK(all_homs == from_morphisms);
      ++pairs;
    }
  CHECK(pairs > 20);
}

TEST_CASE("gamma preserves binary products") {
  const auto gp = uslg_product(S_obj(new_space({"a"}, {2})), S_obj(new_space({"b", "c"}, {1, 1})));
  const SpeckerMV a(gp.object);
  CHECK(cardinality(a) == 3 * 4);
  std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> pairs;
  for (const auto& e : enumerate_elements(a)) {
    const auto l = gamma_mor(gp.proj_left)(e);
    const auto r = gamma_mor(gp.proj_right)(e);
    pairs.insert({{l.values().begin(), l.values().end()}, {r.values().begin(), r.values().end()}});
  }
  CHECK(pairs.size() == 12);
}
