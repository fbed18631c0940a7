#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specker/duality.hpp"
#include "specker/limits.hpp"
#include "specker/mv.hpp"
#include "specker/omega.hpp"
#include "specker/universe.hpp"

// Exhaustive and seeded invariant sweeps over finite test universes.
namespace specker::laws {

struct LawResult {
  explicit LawResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures only

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failures;
    if (messages.size() < 10) messages.push_back(what);
  }
  bool pass() const { return failures == 0; }
};

inline std::string show(const MultiSpace& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x.label(i) + ":" + std::to_string(x.mult(i));
  }
  return s + "}";
}

inline std::string show(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Morphisms of multispaces

/// Identity and associativity over all composable triples, zeta
/// multiplicativity, and the two isomorphism characterizations.
inline LawResult category_laws(const std::vector<MultiSpace>& spaces) {
  LawResult r{"bms category laws"};
  std::map<std::pair<std::size_t, std::size_t>, std::vector<BmsMorphism>> homs;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j) homs[{i, j}] = enumerate_homs(spaces[i], spaces[j]);

  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j) {
      const auto& hs = homs[{i, j}];
      std::set<std::vector<std::size_t>> distinct;
      for (const auto& f : hs) {
        const auto where = show(spaces[i]) + " -> " + show(spaces[j]);
        r.check(distinct.insert({f.gamma().begin(), f.gamma().end()}).second, "duplicate hom " + where);
        r.check(new_morphism(f.dom(), f.cod(), f.label_map()) == f, "enumerated hom does not revalidate " + where);
        r.check(compose(BmsMorphism::identity(f.dom()), f) == f && compose(f, BmsMorphism::identity(f.cod())) == f,
                "identity law " + where);
        // Isomorphism iff some g is a two-sided inverse.
        bool has_inverse = false;
        for (const auto& g : homs[{j, i}])
          has_inverse = has_inverse || (compose(f, g) == BmsMorphism::identity(f.dom()) &&
                                        compose(g, f) == BmsMorphism::identity(f.cod()));
        r.check(has_inverse == is_isomorphism(f), "isomorphism characterizations disagree " + where);
      }
    }

  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j)
      for (std::size_t k = 0; k < spaces.size(); ++k)
        for (const auto& f : homs[{i, j}])
          for (const auto& g : homs[{j, k}]) {
            const auto fg = compose(f, g);
            bool zeta_ok = true;
            for (std::size_t x = 0; x < f.dom().size(); ++x)
              zeta_ok = zeta_ok && fg.zeta(x) == f.zeta(x) * g.zeta(f.image(x));
            r.check(zeta_ok, "zeta of a composite is not the product");
            for (std::size_t l = 0; l < spaces.size(); ++l)
              for (const auto& h : homs[{k, l}])
                r.check(compose(fg, h) == compose(f, compose(g, h)), "associativity");
          }
  return r;
}

// ---------------------------------------------------------------------------
// Duality

/// B(S(X)) is isomorphic to X through M_X, both triangle identities hold,
/// and the counit at S(X) is an isomorphism.
inline LawResult duality_round_trip(const std::vector<MultiSpace>& spaces) {
  LawResult r{"duality round trip"};
  for (const auto& x : spaces) {
    const auto w = unit_M(x);
    const auto bsx = B_obj(S_obj(x));
    r.check(w.forward.dom() == x && w.forward.cod() == bsx, "unit has the wrong type at " + show(x));
    r.check(is_isomorphism(w.forward) && is_valid(w), "unit is not an isomorphism at " + show(x));
    r.check(verify_triangles(x), "first triangle identity fails at " + show(x));
    r.check(verify_triangles_grp(S_obj(x)), "second triangle identity fails at " + show(x));
    const auto c = counit_natural(S_obj(x));
    r.check(is_valid(c) && is_lhom_isomorphism(c.forward), "counit is not an isomorphism at " + show(x));
  }
  return r;
}

/// M is natural, S and B are contravariant functors, and psi_dual inverts S_mor.
inline LawResult functoriality(const std::vector<MultiSpace>& spaces) {
  LawResult r{"functoriality and naturality"};
  for (const auto& x : spaces)
    for (const auto& y : spaces)
      for (const auto& f : enumerate_homs(x, y)) {
        r.check(verify_naturality(f), "naturality square fails " + show(x) + " -> " + show(y));
        r.check(psi_dual(S_mor(f)) == f, "psi_dual(S_mor(f)) != f");
        for (const auto& z : spaces)
          for (const auto& g : enumerate_homs(y, z)) {
            const auto sf = S_mor(f);
            const auto sg = S_mor(g);
            r.check(S_mor(compose(f, g)) == compose(sg, sf), "S does not reverse composition");
            r.check(B_mor(compose(sg, sf)) == compose(B_mor(sf), B_mor(sg)), "B does not reverse composition");
          }
      }
  for (const auto& x : spaces) {
    r.check(S_mor(BmsMorphism::identity(x)) == identity_lhom(S_obj(x)), "S does not preserve identities");
    r.check(B_mor(identity_lhom(S_obj(x))) == BmsMorphism::identity(B_obj(S_obj(x))), "B does not preserve identities");
  }
  return r;
}

/// |Hom(X,Y)| matches the brute-force count of valid matrices S(Y) -> S(X),
/// and S_mor is a bijection between them.
inline LawResult hom_bijection(const std::vector<MultiSpace>& spaces) {
  LawResult r{"hom bijection"};
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const auto rep = verify_hom_bijection(x, y);
      std::string why = rep.failures.empty() ? "" : ": " + rep.failures.front();
      r.check(rep.bijection, "hom bijection fails " + show(x) + " -> " + show(y) + why);
    }
  return r;
}

/// With multiplicity 1 everywhere the duality restricts to finite Stone duality.
inline LawResult stone_restriction(std::size_t max_points) {
  LawResult r{"stone restriction"};
  const auto spaces = all_spaces(max_points, std::uint64_t{1});
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const auto rep = verify_stone_restriction(x, y);
      r.check(rep.unit_singular && rep.bijection && rep.failures.empty(),
              "stone restriction fails " + show(x) + " -> " + show(y));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Limits

/// The 43 apexes with <= 2 points and multiplicities dividing 12.
inline std::vector<MultiSpace> default_test_apexes(std::size_t max_points = 2) {
  return all_spaces(max_points, std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

/// Binary products: LCM multiplicities, agreement with the general limit,
/// and the universal property against every test apex.
inline LawResult lcm_limit_law(const std::vector<MultiSpace>& spaces, const std::vector<MultiSpace>& test_apexes) {
  LawResult r{"lcm limit law"};
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const auto where = show(x) + " x " + show(y);
      const auto p = product(x, y);
      r.check(p.apex.size() == x.size() * y.size(), "product has the wrong number of points " + where);
      bool lcm_ok = true;
      for (std::size_t i = 0; i < p.apex.size(); ++i) {
        const auto a = x.mult(p.legs[0].image(i));
        const auto b = y.mult(p.legs[1].image(i));
        lcm_ok = lcm_ok && p.apex.mult(i) == checked::lcm(a, b);
      }
      r.check(lcm_ok, "apex multiplicity is not the LCM " + where);
      const auto d = product_diagram(x, y);
      r.check(cone_isomorphism(p, limit(d)).has_value(), "product differs from the general limit " + where);
      const auto u = verify_universal(p, d, test_apexes);
      r.check(u.ok(), "universal property fails " + where +
                          (u.violations.empty() ? std::string() : ": " + u.violations.front()));
    }
  return r;
}

/// Equalizers, pullbacks, coproducts, terminal and initial objects, each
/// against its universal property.
inline LawResult finite_limits(const std::vector<MultiSpace>& spaces, const std::vector<MultiSpace>& test_apexes) {
  LawResult r{"finite limits and coproducts"};
  const auto t = terminal();
  r.check(t.apex.size() == 1 && t.apex.mult(0) == 1, "terminal object is not a point of multiplicity 1");
  r.check(verify_universal(t, Diagram(), test_apexes).ok(), "terminal object is not terminal");
  for (const auto& a : test_apexes) r.check(enumerate_homs(initial(), a).size() == 1, "initial object is not initial");

  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const auto where = show(x) + ", " + show(y);
      const auto homs = enumerate_homs(x, y);
      for (const auto& f : homs)
        for (const auto& g : homs) {
          const auto e = equalizer(f, g);
          const auto d = equalizer_diagram(f, g);
          r.check(cone_isomorphism(e, limit(d)).has_value(), "equalizer differs from the general limit " + where);
          r.check(verify_universal(e, d, test_apexes).ok(), "equalizer is not universal " + where);
        }
      const auto cc = coproduct(x, y);
      const auto cd = product_diagram(x, y);
      r.check(verify_couniversal(cc, cd, test_apexes).ok(), "coproduct is not couniversal " + where);
      for (const auto& z : spaces) {
        const auto fs = enumerate_homs(x, z);
        const auto gs = enumerate_homs(y, z);
        for (const auto& f : fs)
          for (const auto& g : gs) {
            const auto p = pullback(f, g);
            const auto d = pullback_diagram(f, g);
            r.check(cone_isomorphism(p, limit(d)).has_value(), "pullback differs from the general limit");
            r.check(verify_universal(p, d, test_apexes).ok(), "pullback is not universal");
          }
      }
    }
  return r;
}

namespace detail {

/// Number of h : t -> mid with second(h) composites matching.
inline bool unique_factorization(const std::vector<LHom>& candidates, const std::vector<std::pair<const LHom*, const LHom*>>& eqs,
                                 bool mediator_first) {
  std::size_t n = 0;
  for (const auto& h : candidates) {
    bool ok = true;
    for (const auto& [leg, target] : eqs) ok = ok && (mediator_first ? compose(h, *leg) : compose(*leg, h)) == *target;
    if (ok) ++n;
  }
  return n == 1;
}

}  // namespace detail

/// S turns coproducts into products and products into coproducts. The
/// comparison isomorphisms must intertwine the structure maps; on the
/// smaller universe the algebraic (co)universal properties are also
/// checked directly against brute-forced homomorphisms.
inline LawResult duality_exchange(const std::vector<MultiSpace>& spaces, const std::vector<MultiSpace>& small,
                                  const std::vector<MultiSpace>& test_spaces) {
  LawResult r{"duality exchange"};
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const auto where = show(x) + ", " + show(y);
      const auto sx = S_obj(x);
      const auto sy = S_obj(y);

      const auto cc = coproduct(x, y);
      const auto gp = uslg_product(sx, sy);
      const auto s_cc = S_obj(cc.apex);
      if (!(s_cc == gp.object)) {
        r.check(false, "S(coproduct) and the group product live over different spaces " + where);
      } else {
        const auto phi = identity_lhom(s_cc);
        r.check(is_lhom_isomorphism(phi) && compose(phi, gp.proj_left) == S_mor(cc.legs[0]) &&
                    compose(phi, gp.proj_right) == S_mor(cc.legs[1]),
                "S(coproduct) is not isomorphic to the group product " + where);
      }

      const auto p = product(x, y);
      const auto gc = uslg_coproduct(sx, sy);
      const auto s_p = S_obj(p.apex);
      if (!(s_p == gc.object)) {
        r.check(false, "S(product) and the group coproduct live over different spaces " + where);
      } else {
        const auto phi = identity_lhom(s_p);
        r.check(is_lhom_isomorphism(phi) && compose(gc.inj_left, phi) == S_mor(p.legs[0]) &&
                    compose(gc.inj_right, phi) == S_mor(p.legs[1]),
                "S(product) is not isomorphic to the group coproduct " + where);
      }
    }

  for (const auto& x : small)
    for (const auto& y : small) {
      const auto where = show(x) + ", " + show(y);
      const auto sx = S_obj(x);
      const auto sy = S_obj(y);
      const auto gp = uslg_product(sx, sy);
      const auto gc = uslg_coproduct(sx, sy);
      for (const auto& t : test_spaces) {
        const auto st = S_obj(t);
        const auto into_p = enumerate_lhoms_bruteforce(st, gp.object);
        for (const auto& f : enumerate_lhoms_bruteforce(st, sx))
          for (const auto& g : enumerate_lhoms_bruteforce(st, sy))
            r.check(detail::unique_factorization(into_p, {{&gp.proj_left, &f}, {&gp.proj_right, &g}}, true),
                    "group product is not universal " + where + " against " + show(t));
        const auto out_of_c = enumerate_lhoms_bruteforce(gc.object, st);
        for (const auto& f : enumerate_lhoms_bruteforce(sx, st))
          for (const auto& g : enumerate_lhoms_bruteforce(sy, st))
            r.check(detail::unique_factorization(out_of_c, {{&gc.inj_left, &f}, {&gc.inj_right, &g}}, false),
                    "group coproduct is not couniversal " + where + " against " + show(t));
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Gamma

/// Cardinality, axioms, fibers, and the boolean case.
inline LawResult gamma_laws(const std::vector<MultiSpace>& spaces) {
  LawResult r{"gamma laws"};
  for (const auto& x : spaces) {
    const auto a = gamma_obj(S_obj(x));
    std::uint64_t expected = 1;
    for (auto m : x.mults()) expected *= m + 1;
    const auto elems = enumerate_elements(a);
    r.check(cardinality(a) == expected && elems.size() == expected, "cardinality differs at " + show(x));
    const auto ax = verify_mv_axioms(a);
    r.check(ax.pass(), "MV axioms fail at " + show(x) + (ax.violations.empty() ? "" : ": " + ax.violations.front()));
    const auto fibers = fiber_decomposition(a);
    r.check(fiber_cardinality(fibers) == expected, "fiber cardinalities do not multiply to the total at " + show(x));
    std::set<std::size_t> covered;
    std::set<std::uint64_t> ns;
    for (const auto& f : fibers) {
      ns.insert(f.n);
      for (auto p : f.points) covered.insert(p);
    }
    r.check(covered.size() == x.size() && ns.size() == fibers.size(), "fibers do not partition the base at " + show(x));
    r.check(verify_mv_axioms_by_fibers(a).pass(), "fiberwise axioms fail at " + show(x));
    if (x.max_mult() <= 1) r.check(is_boolean_algebra(a), "singular unit without a boolean algebra at " + show(x));
  }
  return r;
}

/// gamma_mor preserves the MV operations, and Gamma sends the group product
/// to the cartesian product of the algebras.
inline LawResult gamma_functor(const std::vector<MultiSpace>& spaces) {
  LawResult r{"gamma functor"};
  for (const auto& x : spaces)
    for (const auto& y : spaces)
      for (const auto& f : enumerate_homs(x, y))
        r.check(verify_mv_hom(gamma_mor(S_mor(f))), "gamma_mor is not an MV homomorphism " + show(x) + " -> " + show(y));

  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      const auto gp = uslg_product(S_obj(x), S_obj(y));
      const auto pl = gamma_mor(gp.proj_left);
      const auto pr = gamma_mor(gp.proj_right);
      const auto a = gamma_obj(gp.object);
      const auto ax = gamma_obj(S_obj(x));
      const auto ay = gamma_obj(S_obj(y));
      std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> pairs;
      bool ops_ok = verify_mv_hom(pl) && verify_mv_hom(pr);
      for (const auto& e : enumerate_elements(a)) {
        const auto l = pl(e);
        const auto rr = pr(e);
        pairs.insert({{l.values().begin(), l.values().end()}, {rr.values().begin(), rr.values().end()}});
      }
      r.check(ops_ok && pairs.size() == cardinality(a) && pairs.size() == cardinality(ax) * cardinality(ay),
              "Gamma does not preserve the product " + show(x) + ", " + show(y));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Group-side theory

/// Singulars: count, supp as a lattice isomorphism, the two tests agree,
/// rho(s_S) = 1, and both characterizations of rho agree.
inline LawResult singular_theory(const std::vector<MultiSpace>& spaces) {
  LawResult r{"singular elements"};
  for (const auto& x : spaces) {
    const SpeckerGroup g(x);
    const std::size_t n = x.size();
    std::vector<GroupElement> singulars;
    for (const auto& e : elements_between(constant(g, -1), constant(g, 2))) {
      const bool by_values = is_singular(e);
      r.check(by_values == is_singular_by_definition(e), "singular tests disagree at " + show(e) + " over " + show(x));
      if (by_values) singulars.push_back(e);
    }
    r.check(singulars.size() == (std::size_t{1} << n), "singular count is not 2^n over " + show(x));
    std::set<PointSet> supports;
    for (const auto& a : singulars) {
      supports.insert(supp(a));
      for (const auto& b : singulars) {
        const bool lattice = supp(meet(a, b)) == intersect(supp(a), supp(b)) && supp(join(a, b)) == unite(supp(a), supp(b)) &&
                             elem_leq(a, b) == is_subset(supp(a), supp(b));
        r.check(lattice, "supp is not a lattice isomorphism over " + show(x));
      }
    }
    r.check(supports.size() == (std::size_t{1} << n) && greatest_singular(g) == indicator(g, PointSet(n, true)),
            "supp is not onto the powerset over " + show(x));
    for (const auto& m : maxspec(g)) {
      r.check(rho(m, greatest_singular(g)) == 1, "rho(s_S) != 1 over " + show(x));
      for (const auto& e : elements_between(constant(g, -2), unit(g))) {
        r.check(rho(m, e) == rho_by_translation(m, e), "rho characterizations disagree over " + show(x));
        r.check((natural(e)[m.point()] == 0) == m.contains(e), "natural vanishing differs from membership");
      }
    }
  }
  return r;
}

/// zeroset and ideal maps are mutually inverse and inclusion-reversing, and
/// the two maximality tests agree.
inline LawResult ideal_correspondence(const std::vector<MultiSpace>& spaces) {
  LawResult r{"ideal correspondence"};
  for (const auto& x : spaces) {
    const SpeckerGroup g(x);
    const auto subsets = all_subsets(x.size());
    const auto box = elements_between(constant(g, -1), constant(g, 1));
    for (const auto& z : subsets) {
      const auto ideal = ideal_from_zeroset(g, z);
      const auto gens = ideal.generators();
      const auto back = zeroset_from_ideal(g, gens);
      r.check(back.zeroset() == z, "zeroset(ideal(Z)) != Z over " + show(x));
      for (const auto& e : box) {
        bool vanishes = true;
        for (std::size_t i = 0; i < x.size(); ++i) vanishes = vanishes && (!z[i] || e[i] == 0);
        r.check(ideal.contains(e) == vanishes, "ideal membership is not vanishing on Z");
      }
      r.check(is_maximal(ideal) == is_maximal_by_criterion(ideal), "maximality tests disagree over " + show(x));
      for (const auto& z2 : subsets) {
        const auto ideal2 = ideal_from_zeroset(g, z2);
        bool by_elements = true;
        for (const auto& e : box) by_elements = by_elements && (!ideal.contains(e) || ideal2.contains(e));
        r.check(ideal_contained(ideal, ideal2) == is_subset(z2, z) && by_elements == is_subset(z2, z),
                "correspondence is not inclusion-reversing over " + show(x));
      }
    }
    // Ideal -> zeroset -> ideal, starting from arbitrary generator pairs.
    for (const auto& a : box)
      for (const auto& b : box) {
        const std::vector<GroupElement> gens{a, b};
        const auto ideal = zeroset_from_ideal(g, gens);
        PointSet expect(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) expect[i] = a[i] == 0 && b[i] == 0;
        r.check(ideal.zeroset() == expect, "common zero set is wrong over " + show(x));
        r.check(zeroset_from_ideal(g, ideal.generators()).zeroset() == ideal.zeroset(), "ideal(zeroset(I)) != I");
      }
  }
  return r;
}

/// Least n with n f ^ g == (n+1) f ^ g, computed in closed form: the
/// largest ceil(g(x) / f(x)) over points with f(x) > 0.
inline std::int64_t hyperarch_closed_form(const GroupElement& f, const GroupElement& g) {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > 0) n = std::max(n, (g[i] + f[i] - 1) / f[i]);
  return n;
}

inline LawResult hyperarchimedean(std::size_t max_points, std::int64_t value_bound) {
  LawResult r{"hyperarchimedean witness"};
  for (const auto& x : all_spaces(max_points, std::uint64_t{1})) {
    const SpeckerGroup g(x);
    const auto elems = elements_between(zero(g), constant(g, value_bound));
    for (const auto& f : elems)
      for (const auto& h : elems) {
        const auto n = hyperarch_witness(f, h);
        const bool holds = meet(scalar_mul(n, f), h) == meet(scalar_mul(n + 1, f), h);
        r.check(n >= 0 && n <= max_value(h) && holds && n == hyperarch_closed_form(f, h),
                "witness wrong for f=" + show(f) + " g=" + show(h));
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Omega

inline LawResult omega_obstructions(std::uint64_t seed) {
  LawResult r{"omega obstructions"};
  const auto ns = omega::verify_H_not_specker(seed);
  r.check(ns.closed, "H is not closed");
  r.check(ns.singulars_finite_support, "a singular element of H has nonzero tail");
  r.check(!ns.unit_generated, "the unit is generated by the singulars of H");
  r.check(ns.certificate_valid && ns.certificate_tail_only, "missing or invalid tail certificate");
  r.check(ns.unit_generated_in_full_group, "the unit is not generated by the singulars of the full group");
  r.check(ns.failures.empty(), "not-specker report lists failures");

  const auto pw = omega::discontinuity_witness_power(10);
  r.check(pw.rows.size() == 11, "power sweep does not cover k = 0..10");
  for (const auto& row : pw.rows) r.check(row.lcm == 2, "v(y_k) != 2 at k = " + std::to_string(row.k));
  r.check(pw.limit_lcm == 1 && pw.all_b_lcm == 2, "limit values wrong");

  for (std::size_t k : {std::size_t{0}, std::size_t{16}}) {
    const auto po = omega::pushout_obstruction(k);
    r.check(po.forced_at_infinity == 1 && po.forced.size() == k + 1, "pushout forced table has the wrong shape");
    r.check(std::all_of(po.forced.begin(), po.forced.end(), [](auto v) { return v == 2; }), "forced value != 2");
    r.check(!po.representable && po.pass(), "pushout multiplicity reported representable");
  }
  return r;
}

/// Searches coefficient vectors in [-bound, bound]^k.
inline std::optional<std::vector<std::int64_t>> membership_by_search(const omega::ECSeq& target,
                                                                     const std::vector<omega::ECSeq>& gens,
                                                                     std::int64_t bound) {
  std::vector<std::int64_t> c(gens.size(), -bound);
  while (true) {
    if (omega::combination(gens, c) == target) return c;
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] == bound) c[--i] = -bound;
    if (i == 0) return std::nullopt;
    ++c[i - 1];
  }
}

struct MembershipInstance {
  omega::ECSeq target;
  std::vector<omega::ECSeq> generators;
};

/// Half the targets are planted combinations, half are random sequences.
inline std::vector<MembershipInstance> random_membership_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> ngen(1, 4);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  std::vector<MembershipInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    MembershipInstance inst;
    const auto k = ngen(rng);
    for (std::size_t j = 0; j < k; ++j) inst.generators.push_back(omega::random_sequence(rng, 3, -3, 3));
    if (i % 2 == 0) {
      std::vector<std::int64_t> c(k);
      for (auto& v : c) v = coef(rng);
      inst.target = omega::combination(inst.generators, c);
    } else {
      inst.target = omega::random_sequence(rng, 3, -3, 3);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

inline LawResult membership_oracle(std::uint64_t seed, std::size_t count = 200) {
  LawResult r{"subgroup membership vs search"};
  for (const auto& inst : random_membership_instances(seed, count)) {
    const auto res = omega::subgroup_membership(inst.target, inst.generators);
    const auto found = membership_by_search(inst.target, inst.generators, 5);
    if (found) r.check(res.member, "search found a combination the decision procedure missed");
    if (res.member) {
      r.check(omega::combination(inst.generators, res.coefficients) == inst.target, "returned coefficients are wrong");
    } else {
      r.check(!found && res.certificate && omega::certificate_is_valid(*res.certificate), "refutation without a valid certificate");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

struct SweepConfig {
  std::size_t max_points = 3;
  std::uint64_t max_mult = 4;
  std::uint64_t seed = 0;
};

/// Every law above, with the heavier ones on proportionally smaller
/// universes: triples and quadruples use <= 2 points with multiplicities in
/// {1, 2, 4} intersected with 1..max_mult.
inline std::vector<LawResult> run_all(const SweepConfig& cfg) {
  const auto main = all_spaces(cfg.max_points, cfg.max_mult);
  std::vector<std::uint64_t> small_mults;
  for (std::uint64_t m : {1u, 2u, 4u})
    if (m <= cfg.max_mult) small_mults.push_back(m);
  const auto small = all_spaces(std::min<std::size_t>(cfg.max_points, 2), small_mults);
  const auto tiny = all_spaces(std::min<std::size_t>(cfg.max_points, 1), small_mults);
  const auto apexes = default_test_apexes(std::min<std::size_t>(cfg.max_points, 2));

  std::vector<LawResult> out;
  out.push_back(category_laws(small));
  out.push_back(duality_round_trip(main));
  out.push_back(functoriality(small));
  out.push_back(hom_bijection(main));
  out.push_back(stone_restriction(cfg.max_points));
  out.push_back(lcm_limit_law(main, apexes));
  out.push_back(finite_limits(small, apexes));
  out.push_back(duality_exchange(main, small, tiny));
  out.push_back(gamma_laws(main));
  out.push_back(gamma_functor(small));
  out.push_back(singular_theory(main));
  out.push_back(ideal_correspondence(main));
  out.push_back(hyperarchimedean(cfg.max_points, 3));
  out.push_back(omega_obstructions(cfg.seed));
  out.push_back(membership_oracle(cfg.seed));
  return out;
}

}  // namespace specker::laws
