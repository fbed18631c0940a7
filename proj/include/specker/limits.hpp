#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specker/duality.hpp"
#include "specker/mspace.hpp"
#include "specker/sgroup.hpp"

namespace specker {

struct Arrow {
  std::size_t source;
  std::size_t target;
  BmsMorphism morphism;
};

/// A finite diagram of multispaces.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<MultiSpace> objects, std::vector<Arrow> arrows)
      : objects_(std::move(objects)), arrows_(std::move(arrows)) {
    for (const auto& a : arrows_) {
      if (a.source >= objects_.size() || a.target >= objects_.size()) {
        throw structure_error("diagram arrow refers to a missing object");
      }
      if (!(a.morphism.dom() == objects_[a.source]) || !(a.morphism.cod() == objects_[a.target])) {
        throw structure_error("diagram arrow does not match its source/target objects");
      }
    }
  }

  const std::vector<MultiSpace>& objects() const noexcept { return objects_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

 private:
  std::vector<MultiSpace> objects_;
  std::vector<Arrow> arrows_;
};

/// legs[i] : apex -> objects[i]
struct Cone {
  MultiSpace apex;
  std::vector<BmsMorphism> legs;
};

/// legs[i] : objects[i] -> apex
struct Cocone {
  MultiSpace apex;
  std::vector<BmsMorphism> legs;
};

inline bool is_cone(const Cone& c, const Diagram& d) {
  if (c.legs.size() != d.objects().size()) return false;
  for (std::size_t i = 0; i < c.legs.size(); ++i) {
    if (!(c.legs[i].dom() == c.apex) || !(c.legs[i].cod() == d.objects()[i])) return false;
  }
  for (const auto& a : d.arrows()) {
    if (!(compose(c.legs[a.source], a.morphism) == c.legs[a.target])) return false;
  }
  return true;
}

inline bool is_cocone(const Cocone& c, const Diagram& d) {
  if (c.legs.size() != d.objects().size()) return false;
  for (std::size_t i = 0; i < c.legs.size(); ++i) {
    if (!(c.legs[i].dom() == d.objects()[i]) || !(c.legs[i].cod() == c.apex)) return false;
  }
  for (const auto& a : d.arrows()) {
    if (!(compose(a.morphism, c.legs[a.target]) == c.legs[a.source])) return false;
  }
  return true;
}

namespace detail {

inline std::string tuple_label(const std::vector<const std::string*>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += *parts[i];
  }
  return s + ")";
}

}  // namespace detail

/// Compatible tuples with the LCM multiplicity and the projections as legs.
/// Tuples are listed lexicographically (first object varies slowest).
inline Cone limit(const Diagram& d) {
  const auto& objs = d.objects();
  const std::size_t n = objs.size();
  for (const auto& o : objs)
    if (o.empty()) {
      std::vector<BmsMorphism> legs;
      for (const auto& t : objs) legs.emplace_back(MultiSpace(), t, std::vector<std::size_t>{});
      return Cone{MultiSpace(), std::move(legs)};
    }

  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> mults;
  std::vector<std::size_t> cur(n, 0);
  while (true) {
    bool compatible = true;
    for (const auto& a : d.arrows()) {
      if (a.morphism.image(cur[a.source]) != cur[a.target]) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      std::vector<const std::string*> parts;
      std::uint64_t v = 1;
      for (std::size_t i = 0; i < n; ++i) {
        parts.push_back(&objs[i].label(cur[i]));
        v = checked::lcm(v, objs[i].mult(cur[i]));
      }
      tuples.push_back(cur);
      labels.push_back(detail::tuple_label(parts));
      mults.push_back(v);
    }
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++cur[k] < objs[k].size()) {
        done = false;
        break;
      }
      cur[k] = 0;
    }
    if (done) break;
  }
  MultiSpace apex(std::move(labels), std::move(mults));
  std::vector<BmsMorphism> legs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> gamma(tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) gamma[t] = tuples[t][i];
    legs.emplace_back(apex, objs[i], std::move(gamma));
  }
  return Cone{std::move(apex), std::move(legs)};
}

// ---------------------------------------------------------------------------
// Standard shapes

inline Diagram product_diagram(const MultiSpace& x, const MultiSpace& y) { return Diagram({x, y}, {}); }

inline Diagram equalizer_diagram(const BmsMorphism& f, const BmsMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw structure_error("equalizer needs parallel morphisms");
  return Diagram({f.dom(), f.cod()}, {Arrow{0, 1, f}, Arrow{0, 1, g}});
}

inline Diagram pullback_diagram(const BmsMorphism& f, const BmsMorphism& g) {
  if (!(f.cod() == g.cod())) throw structure_error("pullback needs morphisms with a common codomain");
  return Diagram({f.dom(), g.dom(), f.cod()}, {Arrow{0, 2, f}, Arrow{1, 2, g}});
}

/// The one-point space of multiplicity 1.
inline Cone terminal() { return limit(Diagram()); }

/// Pairs (x, y) with multiplicity lcm(u(x), u(y)).
inline Cone product(const MultiSpace& x, const MultiSpace& y) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> mults;
  std::vector<std::size_t> px, py;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      labels.push_back("(" + x.label(i) + "," + y.label(j) + ")");
      mults.push_back(checked::lcm(x.mult(i), y.mult(j)));
      px.push_back(i);
      py.push_back(j);
    }
  MultiSpace apex(std::move(labels), std::move(mults));
  std::vector<BmsMorphism> legs;
  legs.emplace_back(apex, x, std::move(px));
  legs.emplace_back(apex, y, std::move(py));
  return Cone{std::move(apex), std::move(legs)};
}

/// The subspace {x : f(x) = g(x)} with inherited multiplicities.
inline Cone equalizer(const BmsMorphism& f, const BmsMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw structure_error("equalizer needs parallel morphisms");
  std::vector<std::string> labels;
  std::vector<std::uint64_t> mults;
  std::vector<std::size_t> incl, through;
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    if (f.image(x) != g.image(x)) continue;
    labels.push_back(f.dom().label(x));
    mults.push_back(f.dom().mult(x));
    incl.push_back(x);
    through.push_back(f.image(x));
  }
  MultiSpace apex(std::move(labels), std::move(mults));
  std::vector<BmsMorphism> legs;
  legs.emplace_back(apex, f.dom(), std::move(incl));
  legs.emplace_back(apex, f.cod(), std::move(through));
  return Cone{std::move(apex), std::move(legs)};
}

/// Pairs (x, x') with f(x) = g(x'), multiplicity lcm(u(x), u(x')).
inline Cone pullback(const BmsMorphism& f, const BmsMorphism& g) {
  if (!(f.cod() == g.cod())) throw structure_error("pullback needs morphisms with a common codomain");
  std::vector<std::string> labels;
  std::vector<std::uint64_t> mults;
  std::vector<std::size_t> p1, p2, pz;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (std::size_t j = 0; j < g.dom().size(); ++j) {
      if (f.image(i) != g.image(j)) continue;
      labels.push_back("(" + f.dom().label(i) + "," + g.dom().label(j) + ")");
      mults.push_back(checked::lcm(f.dom().mult(i), g.dom().mult(j)));
      p1.push_back(i);
      p2.push_back(j);
      pz.push_back(f.image(i));
    }
  MultiSpace apex(std::move(labels), std::move(mults));
  std::vector<BmsMorphism> legs;
  legs.emplace_back(apex, f.dom(), std::move(p1));
  legs.emplace_back(apex, g.dom(), std::move(p2));
  legs.emplace_back(apex, f.cod(), std::move(pz));
  return Cone{std::move(apex), std::move(legs)};
}

/// An isomorphism a.apex -> b.apex commuting with the legs, if one exists.
/// Each point can only go to a point of equal multiplicity with the same leg
/// images; a bijection is searched among those candidates.
inline std::optional<BmsMorphism> cone_isomorphism(const Cone& a, const Cone& b) {
  if (a.legs.size() != b.legs.size() || a.apex.size() != b.apex.size()) return std::nullopt;
  const std::size_t n = a.apex.size();
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (a.apex.mult(p) != b.apex.mult(q)) continue;
      bool same = true;
      for (std::size_t i = 0; i < a.legs.size() && same; ++i) {
        same = a.legs[i].cod() == b.legs[i].cod() && a.legs[i].image(p) == b.legs[i].image(q);
      }
      if (same) candidates[p].push_back(q);
    }
    if (candidates[p].empty()) return std::nullopt;
  }
  std::vector<std::size_t> gamma(n);
  std::vector<bool> used(n, false);
  auto search = [&](auto& self, std::size_t p) -> bool {
    if (p == n) return true;
    for (auto q : candidates[p]) {
      if (used[q]) continue;
      used[q] = true;
      gamma[p] = q;
      if (self(self, p + 1)) return true;
      used[q] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  BmsMorphism m(a.apex, b.apex, std::move(gamma));
  for (std::size_t i = 0; i < a.legs.size(); ++i)
    if (!(compose(m, b.legs[i]) == a.legs[i])) return std::nullopt;
  return m;
}

// ---------------------------------------------------------------------------
// Coproducts

/// Disjoint union with labels prefixed "L:" and "R:".
inline Cocone coproduct(const MultiSpace& x, const MultiSpace& y) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> mults;
  for (std::size_t i = 0; i < x.size(); ++i) {
    labels.push_back("L:" + x.label(i));
    mults.push_back(x.mult(i));
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    labels.push_back("R:" + y.label(j));
    mults.push_back(y.mult(j));
  }
  MultiSpace apex(std::move(labels), std::move(mults));
  std::vector<std::size_t> il(x.size()), ir(y.size());
  for (std::size_t i = 0; i < il.size(); ++i) il[i] = i;
  for (std::size_t j = 0; j < ir.size(); ++j) ir[j] = x.size() + j;
  std::vector<BmsMorphism> legs;
  legs.emplace_back(x, apex, std::move(il));
  legs.emplace_back(y, apex, std::move(ir));
  return Cocone{std::move(apex), std::move(legs)};
}

inline MultiSpace initial() { return MultiSpace(); }

// ---------------------------------------------------------------------------
// Universal-property checks on a declared finite universe

struct UniversalReport {
  std::size_t apexes = 0;
  std::size_t cones = 0;
  std::size_t existence_failures = 0;
  std::size_t uniqueness_failures = 0;
  std::vector<std::string> violations;

  bool ok() const { return existence_failures == 0 && uniqueness_failures == 0 && violations.empty(); }
};

namespace detail {

/// Visits every family (m_i : T -> objects[i]) or (m_i : objects[i] -> T).
template <class Visit>
void for_each_family(const std::vector<std::vector<BmsMorphism>>& choices, Visit visit) {
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<const BmsMorphism*> fam(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) fam[i] = &choices[i][pos[i]];
    visit(fam);
    std::size_t k = choices.size();
    while (true) {
      if (k == 0) return;
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
    }
  }
}

inline std::vector<std::size_t> gamma_key(const std::vector<const BmsMorphism*>& fam) {
  std::vector<std::size_t> key;
  for (const auto* m : fam) {
    key.insert(key.end(), m->gamma().begin(), m->gamma().end());
    key.push_back(SIZE_MAX);
  }
  return key;
}

}  // namespace detail

/// For every test apex T and every cone from T over d, counts mediating
/// morphisms T -> candidate.apex; exactly one is required.
inline UniversalReport verify_universal(const Cone& candidate, const Diagram& d,
                                        const std::vector<MultiSpace>& test_apexes) {
  UniversalReport r;
  if (!is_cone(candidate, d)) {
    r.violations.push_back("candidate is not a cone over the diagram");
    return r;
  }
  const auto& objs = d.objects();
  for (const auto& t : test_apexes) {
    ++r.apexes;
    // Mediating morphisms grouped by the cone they induce.
    std::map<std::vector<std::size_t>, std::size_t> induced;
    for (const auto& m : enumerate_homs(t, candidate.apex)) {
      std::vector<BmsMorphism> legs;
      for (const auto& leg : candidate.legs) legs.push_back(compose(m, leg));
      std::vector<const BmsMorphism*> fam;
      for (const auto& l : legs) fam.push_back(&l);
      ++induced[detail::gamma_key(fam)];
    }
    std::vector<std::vector<BmsMorphism>> choices;
    for (const auto& o : objs) choices.push_back(enumerate_homs(t, o));
    if (objs.empty()) {
      ++r.cones;
      const auto n = induced[detail::gamma_key({})];
      if (n == 0) ++r.existence_failures;
      if (n > 1) ++r.uniqueness_failures;
      continue;
    }
    detail::for_each_family(choices, [&](const std::vector<const BmsMorphism*>& fam) {
      for (const auto& a : d.arrows()) {
        if (!(compose(*fam[a.source], a.morphism) == *fam[a.target])) return;
      }
      ++r.cones;
      auto it = induced.find(detail::gamma_key(fam));
      const std::size_t n = it == induced.end() ? 0 : it->second;
      if (n == 0) {
        ++r.existence_failures;
        if (r.violations.size() < 16) r.violations.push_back("no mediating morphism from a test apex of " + std::to_string(t.size()) + " points");
      } else if (n > 1) {
        ++r.uniqueness_failures;
        if (r.violations.size() < 16) r.violations.push_back(std::to_string(n) + " mediating morphisms for one cone");
      }
    });
  }
  return r;
}

/// Dual check for cocones: every cocone into a test target factors uniquely
/// through candidate.apex.
inline UniversalReport verify_couniversal(const Cocone& candidate, const Diagram& d,
                                          const std::vector<MultiSpace>& test_targets) {
  UniversalReport r;
  if (!is_cocone(candidate, d)) {
    r.violations.push_back("candidate is not a cocone under the diagram");
    return r;
  }
  const auto& objs = d.objects();
  for (const auto& t : test_targets) {
    ++r.apexes;
    std::map<std::vector<std::size_t>, std::size_t> induced;
    for (const auto& m : enumerate_homs(candidate.apex, t)) {
      std::vector<BmsMorphism> legs;
      for (const auto& leg : candidate.legs) legs.push_back(compose(leg, m));
      std::vector<const BmsMorphism*> fam;
      for (const auto& l : legs) fam.push_back(&l);
      ++induced[detail::gamma_key(fam)];
    }
    std::vector<std::vector<BmsMorphism>> choices;
    for (const auto& o : objs) choices.push_back(enumerate_homs(o, t));
    if (objs.empty()) {
      ++r.cones;
      const auto n = induced[detail::gamma_key({})];
      if (n == 0) ++r.existence_failures;
      if (n > 1) ++r.uniqueness_failures;
      continue;
    }
    detail::for_each_family(choices, [&](const std::vector<const BmsMorphism*>& fam) {
      for (const auto& a : d.arrows()) {
        if (!(compose(a.morphism, *fam[a.target]) == *fam[a.source])) return;
      }
      ++r.cones;
      auto it = induced.find(detail::gamma_key(fam));
      const std::size_t n = it == induced.end() ? 0 : it->second;
      if (n == 0) {
        ++r.existence_failures;
        if (r.violations.size() < 16) r.violations.push_back("no mediating morphism into a test target");
      } else if (n > 1) {
        ++r.uniqueness_failures;
        if (r.violations.size() < 16) r.violations.push_back(std::to_string(n) + " mediating morphisms for one cocone");
      }
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// The dual constructions on the algebra side

/// Product in uSlg: the group over the disjoint union, with projections.
struct GroupProduct {
  SpeckerGroup object;
  LHom proj_left;
  LHom proj_right;
};

/// Coproduct in uSlg: the group over the LCM product, with injections.
struct GroupCoproduct {
  SpeckerGroup object;
  LHom inj_left;
  LHom inj_right;
};

inline GroupProduct uslg_product(const SpeckerGroup& a, const SpeckerGroup& b) {
  const auto cc = coproduct(a.base(), b.base());
  return GroupProduct{S_obj(cc.apex), S_mor(cc.legs[0]), S_mor(cc.legs[1])};
}

inline GroupCoproduct uslg_coproduct(const SpeckerGroup& a, const SpeckerGroup& b) {
  const auto c = product(a.base(), b.base());
  return GroupCoproduct{S_obj(c.apex), S_mor(c.legs[0]), S_mor(c.legs[1])};
}

}  // namespace specker
