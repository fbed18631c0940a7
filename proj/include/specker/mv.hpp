#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specker/sgroup.hpp"

namespace specker {

/// Gamma(S, u): the unit interval [0, u] with x (+) y = (x + y) ^ u and
/// not x = u - x. Elements are GroupElements of the underlying group.
class SpeckerMV {
 public:
  SpeckerMV() = default;
  explicit SpeckerMV(SpeckerGroup group) : group_(std::move(group)) {}

  const SpeckerGroup& group() const noexcept { return group_; }

  bool contains(const GroupElement& x) const {
    return x.group() == group_ && elem_leq(zero(group_), x) && elem_leq(x, unit(group_));
  }

  friend bool operator==(const SpeckerMV&, const SpeckerMV&) = default;

 private:
  SpeckerGroup group_;
};

inline SpeckerMV gamma_obj(const SpeckerGroup& g) { return SpeckerMV(g); }

namespace detail {
inline void require_member(const SpeckerMV& a, const GroupElement& x) {
  if (!(x.group() == a.group())) throw structure_error("element belongs to a different algebra");
  if (!a.contains(x)) throw domain_error("element lies outside the unit interval");
}
}  // namespace detail

inline GroupElement mv_zero(const SpeckerMV& a) { return zero(a.group()); }

inline GroupElement mv_plus(const SpeckerMV& a, const GroupElement& x, const GroupElement& y) {
  detail::require_member(a, x);
  detail::require_member(a, y);
  return meet(add(x, y), unit(a.group()));
}

inline GroupElement mv_neg(const SpeckerMV& a, const GroupElement& x) {
  detail::require_member(a, x);
  return sub(unit(a.group()), x);
}

/// |Gamma| = prod (u(x) + 1).
inline std::uint64_t cardinality(const SpeckerMV& a) {
  std::uint64_t c = 1;
  for (auto m : a.group().base().mults()) c = checked::mul(c, m + 1);
  return c;
}

/// All elements, odometer order. Sweep use only.
inline std::vector<GroupElement> enumerate_elements(const SpeckerMV& a) {
  return elements_between(zero(a.group()), unit(a.group()));
}

/// An MV-homomorphism obtained by restricting a unital l-homomorphism.
class MVHom {
 public:
  explicit MVHom(LHom h) : h_(std::move(h)) {}

  SpeckerMV dom() const { return SpeckerMV(h_.dom()); }
  SpeckerMV cod() const { return SpeckerMV(h_.cod()); }
  const LHom& lhom() const noexcept { return h_; }

  GroupElement operator()(const GroupElement& x) const {
    detail::require_member(dom(), x);
    return apply_lhom(h_, x);
  }

 private:
  LHom h_;
};

inline MVHom gamma_mor(const LHom& h) { return MVHom(h); }

// ---------------------------------------------------------------------------
// Axiom verification

struct MVAxiomReport {
  std::size_t elements = 0;
  std::size_t tuples_checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

namespace detail {

/// Operation tables over an enumerated algebra, indexed by element position.
struct MVTables {
  std::vector<GroupElement> elems;
  std::vector<std::size_t> plus;  // plus[i * n + j]
  std::vector<std::size_t> neg;
  std::size_t zero = 0;
  std::size_t top = 0;
};

inline std::size_t mixed_radix_index(const SpeckerMV& a, const GroupElement& x) {
  std::size_t idx = 0;
  const auto mults = a.group().base().mults();
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * (mults[i] + 1) + static_cast<std::size_t>(x[i]);
  return idx;
}

inline MVTables build_tables(const SpeckerMV& a) {
  MVTables t;
  t.elems = enumerate_elements(a);
  const std::size_t n = t.elems.size();
  t.plus.resize(n * n);
  t.neg.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.neg[i] = mixed_radix_index(a, mv_neg(a, t.elems[i]));
    for (std::size_t j = 0; j < n; ++j) t.plus[i * n + j] = mixed_radix_index(a, mv_plus(a, t.elems[i], t.elems[j]));
  }
  t.zero = mixed_radix_index(a, mv_zero(a));
  t.top = t.neg[t.zero];
  return t;
}

}  // namespace detail

/// Exhaustive check of associativity, x (+) 0 = x, x (+) not 0 = not 0,
/// not not x = x, x (+) not(x (+) not y) = y (+) not(y (+) not x), and
/// commutativity, over every element tuple.
inline MVAxiomReport verify_mv_axioms(const SpeckerMV& a) {
  MVAxiomReport r;
  const auto t = detail::build_tables(a);
  const std::size_t n = t.elems.size();
  r.elements = n;
  auto P = [&](std::size_t x, std::size_t y) { return t.plus[x * n + y]; };
  auto N = [&](std::size_t x) { return t.neg[x]; };
  auto record = [&](const std::string& law, std::size_t x) {
    if (r.violations.size() < 16) r.violations.push_back(law + " fails at element #" + std::to_string(x));
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (P(x, t.zero) != x) record("x (+) 0 = x", x);
    if (P(x, t.top) != t.top) record("x (+) not 0 = not 0", x);
    if (N(N(x)) != x) record("not not x = x", x);
    for (std::size_t y = 0; y < n; ++y) {
      if (P(x, y) != P(y, x)) record("commutativity", x);
      if (P(x, N(P(x, N(y)))) != P(y, N(P(y, N(x))))) record("x (+) not(x (+) not y) = y (+) not(y (+) not x)", x);
      for (std::size_t z = 0; z < n; ++z) {
        if (P(x, P(y, z)) != P(P(x, y), z)) record("associativity", x);
      }
      r.tuples_checked += n;
    }
  }
  return r;
}

struct FiberComponent {
  std::vector<std::size_t> points;
  std::uint64_t n;
};

/// Base points grouped by unit value, ascending in the value.
inline std::vector<FiberComponent> fiber_decomposition(const SpeckerMV& a) {
  std::map<std::uint64_t, std::vector<std::size_t>> groups;
  const auto& base = a.group().base();
  for (std::size_t i = 0; i < base.size(); ++i) groups[base.mult(i)].push_back(i);
  std::vector<FiberComponent> out;
  for (auto& [n, pts] : groups) out.push_back(FiberComponent{std::move(pts), n});
  return out;
}

/// prod over fibers of (n + 1)^{|X_i|}.
inline std::uint64_t fiber_cardinality(const std::vector<FiberComponent>& fibers) {
  std::uint64_t c = 1;
  for (const auto& f : fibers)
    for (std::size_t k = 0; k < f.points.size(); ++k) c = checked::mul(c, f.n + 1);
  return c;
}

/// Every equation is pointwise, so it holds in Gamma(C_X, u) iff it holds in
/// each chain Gamma(Z, u(x)); this checks one chain per distinct unit value.
inline MVAxiomReport verify_mv_axioms_by_fibers(const SpeckerMV& a) {
  MVAxiomReport total;
  for (const auto& f : fiber_decomposition(a)) {
    const SpeckerMV chain(SpeckerGroup(MultiSpace({"x"}, {f.n})));
    auto r = verify_mv_axioms(chain);
    total.elements += r.elements;
    total.tuples_checked += r.tuples_checked;
    for (auto& v : r.violations) total.violations.push_back("chain of length " + std::to_string(f.n + 1) + ": " + v);
  }
  return total;
}

/// x (+) x == x for every element.
inline bool is_boolean_algebra(const SpeckerMV& a) {
  for (const auto& x : enumerate_elements(a))
    if (!(mv_plus(a, x, x) == x)) return false;
  return true;
}

/// The restriction preserves (+), not and 0 on every element pair.
inline bool verify_mv_hom(const MVHom& h) {
  const auto dom = h.dom();
  const auto cod = h.cod();
  if (!(h(mv_zero(dom)) == mv_zero(cod))) return false;
  const auto elems = enumerate_elements(dom);
  for (const auto& x : elems) {
    const auto hx = h(x);
    if (!cod.contains(hx)) return false;
    if (!(h(mv_neg(dom, x)) == mv_neg(cod, hx))) return false;
    for (const auto& y : elems)
      if (!(h(mv_plus(dom, x, y)) == mv_plus(cod, hx, h(y)))) return false;
  }
  return true;
}

}  // namespace specker
