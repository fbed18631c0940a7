#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specker/intlin.hpp"
#include "specker/mspace.hpp"
#include "specker/sgroup.hpp"

namespace specker {

// ---------------------------------------------------------------------------
// The functor S

inline SpeckerGroup S_obj(const MultiSpace& x) { return SpeckerGroup(x); }

/// gamma : W -> V  becomes  C_V -> C_W,  f |-> zeta * (f o gamma).
inline LHom S_mor(const BmsMorphism& gamma) {
  IntMatrix m(gamma.dom().size(), gamma.cod().size());
  for (std::size_t w = 0; w < gamma.dom().size(); ++w) {
    m(w, gamma.image(w)) = checked::to_signed(gamma.zeta(w));
  }
  return LHom(S_obj(gamma.cod()), S_obj(gamma.dom()), std::move(m));
}

// ---------------------------------------------------------------------------
// The functor B

inline std::string maximal_ideal_label(const std::string& point) { return "m_" + point; }

/// (maxspec(S), u^natural), points labeled m_<x> in base order.
inline MultiSpace B_obj(const SpeckerGroup& g) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> mults;
  const auto u_nat = natural(unit(g));
  for (const auto& m : maxspec(g)) {
    labels.push_back(maximal_ideal_label(m.label()));
    mults.push_back(static_cast<std::uint64_t>(u_nat[m.point()]));
  }
  return MultiSpace(std::move(labels), std::move(mults));
}

/// The preimage psi^{-1}(m) of a maximal ideal of the codomain. An
/// indicator e_v lies outside psi^{-1}(m) exactly when v is in the zero set.
inline ClosedSetIdeal preimage(const LHom& psi, const MaximalIdeal& m) {
  if (!(m.group() == psi.cod())) throw structure_error("maximal ideal does not belong to the codomain");
  PointSet z(psi.dom().dimension(), false);
  for (std::size_t v = 0; v < z.size(); ++v) {
    z[v] = !m.contains(apply_lhom(psi, basis_element(psi.dom(), v)));
  }
  return ClosedSetIdeal(psi.dom(), std::move(z));
}

/// psi : S -> T  becomes  B(T) -> B(S),  m |-> psi^{-1}(m).
inline BmsMorphism B_mor(const LHom& psi) {
  const auto src = B_obj(psi.cod());
  const auto dst = B_obj(psi.dom());
  std::vector<std::size_t> gamma(src.size());
  const auto v_nat = natural(unit(psi.cod()));
  const auto u_nat = natural(unit(psi.dom()));
  for (const auto& m : maxspec(psi.cod())) {
    const auto pre = preimage(psi, m);
    if (!is_maximal(pre)) throw domain_error("preimage of a maximal ideal is not maximal");
    const auto v = static_cast<std::size_t>(std::find(pre.zeroset().begin(), pre.zeroset().end(), true) -
                                            pre.zeroset().begin());
    const auto w = m.point();
    if (v_nat[w] % u_nat[v] != 0 || v_nat[w] / u_nat[v] < 1) {
      throw domain_error("multiplicity constant of the preimage map is not a positive integer");
    }
    gamma[w] = v;
  }
  return BmsMorphism(src, dst, std::move(gamma));
}

// ---------------------------------------------------------------------------
// Unit and counit

enum class Direction { unit, counit };

/// A component of the unit or counit with its inverse.
template <class Object, class Morphism>
struct NaturalIsoWitness {
  Direction direction;
  Object object;
  Morphism forward;
  Morphism backward;
};

using UnitWitness = NaturalIsoWitness<MultiSpace, BmsMorphism>;
using CounitWitness = NaturalIsoWitness<SpeckerGroup, LHom>;

template <class O, class M>
bool is_valid(const NaturalIsoWitness<O, M>& w) {
  const auto there_and_back = compose(w.forward, w.backward);
  const auto back_and_there = compose(w.backward, w.forward);
  if constexpr (std::is_same_v<M, BmsMorphism>) {
    return there_and_back == BmsMorphism::identity(w.forward.dom()) &&
           back_and_there == BmsMorphism::identity(w.forward.cod());
  } else {
    return there_and_back == identity_lhom(w.forward.dom()) && back_and_there == identity_lhom(w.forward.cod());
  }
}

/// M_X : x |-> m_x, with inverse Z_X.
inline UnitWitness unit_M(const MultiSpace& x) {
  const auto target = B_obj(S_obj(x));
  std::vector<std::size_t> gamma(x.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = target.index_of(maximal_ideal_label(x.label(i)));
  BmsMorphism forward(x, target, std::move(gamma));
  auto backward = inverse(forward);
  return UnitWitness{Direction::unit, x, std::move(forward), std::move(backward)};
}

/// g |-> g^natural as a homomorphism S -> S(B(S)); column x is x-natural of
/// the indicator e_x.
inline CounitWitness counit_natural(const SpeckerGroup& g) {
  const auto target = S_obj(B_obj(g));
  IntMatrix m(target.dimension(), g.dimension());
  for (std::size_t x = 0; x < g.dimension(); ++x) {
    const auto col = natural(basis_element(g, x));
    for (std::size_t r = 0; r < col.size(); ++r) m(r, x) = col[r];
  }
  LHom forward(g, target, std::move(m));
  auto backward = inverse(forward);
  return CounitWitness{Direction::counit, g, std::move(forward), std::move(backward)};
}

/// S(M_X) after natural_{S(X)} is the identity on S(X).
inline bool verify_triangles(const MultiSpace& x) {
  const auto sx = S_obj(x);
  return compose(counit_natural(sx).forward, S_mor(unit_M(x).forward)) == identity_lhom(sx);
}

/// B(natural_T) after M_{B(T)} is the identity on B(T).
inline bool verify_triangles_grp(const SpeckerGroup& t) {
  const auto bt = B_obj(t);
  return compose(unit_M(bt).forward, B_mor(counit_natural(t).forward)) == BmsMorphism::identity(bt);
}

/// Naturality square: M_Y o gamma == B(S(gamma)) o M_X.
inline bool verify_naturality(const BmsMorphism& gamma) {
  const auto lhs = compose(gamma, unit_M(gamma.cod()).forward);
  const auto rhs = compose(unit_M(gamma.dom()).forward, B_mor(S_mor(gamma)));
  return lhs == rhs;
}

/// Z_V o B(psi) o M_W : W -> V for psi : C_V -> C_W.
inline BmsMorphism psi_dual(const LHom& psi) {
  return compose(compose(unit_M(psi.cod().base()).forward, B_mor(psi)), unit_M(psi.dom().base()).backward);
}

// ---------------------------------------------------------------------------
// Hom-set bijection

/// Every valid matrix C_V -> C_W found by trying, in each row, every column
/// and every entry 1..u_W(w), and keeping what validate_lhom accepts.
inline std::vector<LHom> enumerate_lhoms_bruteforce(const SpeckerGroup& dom, const SpeckerGroup& cod) {
  const std::size_t rows = cod.dimension();
  const std::size_t cols = dom.dimension();
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> choices(rows);
  for (std::size_t w = 0; w < rows; ++w) {
    for (std::size_t v = 0; v < cols; ++v)
      for (std::int64_t k = 1; k <= checked::to_signed(cod.base().mult(w)); ++k) choices[w].emplace_back(v, k);
    if (choices[w].empty()) return {};
  }
  std::vector<LHom> out;
  std::vector<std::size_t> pos(rows, 0);
  while (true) {
    IntMatrix m(rows, cols);
    for (std::size_t w = 0; w < rows; ++w) m(w, choices[w][pos[w]].first) = choices[w][pos[w]].second;
    if (!lhom_defect(m, dom, cod)) out.push_back(validate_lhom(std::move(m), dom, cod));
    std::size_t k = rows;
    while (true) {
      if (k == 0) return out;
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
    }
  }
}

struct HomBijectionReport {
  std::size_t homs_bms = 0;
  std::size_t homs_uslg = 0;
  bool injective = true;
  bool surjective = true;
  bool bijection = true;
  std::vector<std::string> failures;
};

/// Compares Hom_Bms(X, Y) under S with the brute-force enumeration of
/// unital l-homomorphisms S(Y) -> S(X).
inline HomBijectionReport verify_hom_bijection(const MultiSpace& x, const MultiSpace& y) {
  HomBijectionReport r;
  const auto homs = enumerate_homs(x, y);
  const auto lhoms = enumerate_lhoms_bruteforce(S_obj(y), S_obj(x));
  r.homs_bms = homs.size();
  r.homs_uslg = lhoms.size();

  std::set<std::vector<std::int64_t>> images;
  for (const auto& g : homs) {
    const auto h = S_mor(g);
    const auto rows = h.matrix().to_rows();
    std::vector<std::int64_t> flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    if (!images.insert(flat).second) {
      r.injective = false;
      r.failures.push_back("two morphisms share the same image under S_mor");
    }
    if (!(psi_dual(h) == g)) r.failures.push_back("psi_dual(S_mor(gamma)) differs from gamma");
  }
  for (const auto& h : lhoms) {
    const auto rows = h.matrix().to_rows();
    std::vector<std::int64_t> flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    if (!images.count(flat)) {
      r.surjective = false;
      r.failures.push_back("a unital l-homomorphism is not the image of any morphism");
    }
    if (!(S_mor(psi_dual(h)) == h)) r.failures.push_back("S_mor(psi_dual(psi)) differs from psi");
  }
  if (r.homs_bms != r.homs_uslg) {
    r.failures.push_back("hom counts differ: " + std::to_string(r.homs_bms) + " vs " + std::to_string(r.homs_uslg));
  }
  r.bijection = r.injective && r.surjective && r.homs_bms == r.homs_uslg && r.failures.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Restriction to constant multiplicity 1

/// Boolean-algebra homomorphisms P(Y) -> P(X), each given by the images of
/// the atoms {y}: pairwise disjoint subsets of X covering X.
inline std::vector<std::vector<PointSet>> boolean_homs_by_atoms(std::size_t x_points, std::size_t y_points) {
  const auto subsets = all_subsets(x_points);
  std::vector<std::vector<PointSet>> out;
  if (y_points == 0) {
    if (x_points == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> pos(y_points, 0);
  while (true) {
    PointSet covered(x_points, false);
    bool ok = true;
    for (std::size_t y = 0; y < y_points && ok; ++y) {
      const auto& s = subsets[pos[y]];
      const auto overlap = intersect(covered, s);
      if (std::find(overlap.begin(), overlap.end(), true) != overlap.end()) ok = false;
      covered = unite(covered, s);
    }
    if (ok && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
      std::vector<PointSet> atoms;
      for (std::size_t y = 0; y < y_points; ++y) atoms.push_back(subsets[pos[y]]);
      out.push_back(std::move(atoms));
    }
    std::size_t k = y_points;
    while (true) {
      if (k == 0) return out;
      --k;
      if (++pos[k] < subsets.size()) break;
      pos[k] = 0;
    }
  }
}

struct StoneReport {
  std::size_t homs_bms = 0;
  std::size_t boolean_homs = 0;
  bool unit_singular = true;
  bool bijection = true;
  std::vector<std::string> failures;
};

/// For multiplicity-1 spaces: the unit of S(X) is singular, and gamma |->
/// (y |-> gamma^{-1}(y)) is a bijection onto the boolean homomorphisms, with
/// S_mor(gamma) sending each atom indicator e_y to e_{gamma^{-1}(y)}.
inline StoneReport verify_stone_restriction(const MultiSpace& x, const MultiSpace& y) {
  StoneReport r;
  for (const auto* s : {&x, &y}) {
    if (s->max_mult() > 1) throw domain_error("Stone restriction needs constant multiplicity 1");
  }
  r.unit_singular = is_singular(unit(S_obj(x))) && is_singular(unit(S_obj(y)));
  const auto homs = enumerate_homs(x, y);
  const auto bas = boolean_homs_by_atoms(x.size(), y.size());
  r.homs_bms = homs.size();
  r.boolean_homs = bas.size();
  std::set<std::vector<PointSet>> seen;
  for (const auto& g : homs) {
    std::vector<PointSet> atoms(y.size(), PointSet(x.size(), false));
    for (std::size_t i = 0; i < x.size(); ++i) atoms[g.image(i)][i] = true;
    if (std::find(bas.begin(), bas.end(), atoms) == bas.end()) r.failures.push_back("preimage map is not a boolean homomorphism");
    if (!seen.insert(atoms).second) r.failures.push_back("two morphisms induce the same boolean homomorphism");
    const auto h = S_mor(g);
    for (std::size_t j = 0; j < y.size(); ++j) {
      PointSet atom(y.size(), false);
      atom[j] = true;
      if (!(apply_lhom(h, indicator(h.dom(), atom)) == indicator(h.cod(), atoms[j]))) {
        r.failures.push_back("S_mor does not act as the preimage on atoms");
      }
    }
  }
  if (seen.size() != bas.size()) r.failures.push_back("boolean homomorphism count differs from hom count");
  r.bijection = r.failures.empty() && r.unit_singular;
  return r;
}

}  // namespace specker
