#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specker/checked.hpp"
#include "specker/error.hpp"
#include "specker/intlin.hpp"
#include "specker/mspace.hpp"

namespace specker {

/// Subset of the points of a base space, as a membership mask.
using PointSet = std::vector<bool>;

inline PointSet intersect(const PointSet& a, const PointSet& b) {
  PointSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline PointSet unite(const PointSet& a, const PointSet& b) {
  PointSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

inline bool is_subset(const PointSet& a, const PointSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

/// Every subset of an n-point base, in binary counting order (point 0 is the
/// low bit).
inline std::vector<PointSet> all_subsets(std::size_t n) {
  if (n >= 20) throw domain_error("refusing to enumerate 2^" + std::to_string(n) + " subsets");
  std::vector<PointSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
    out.push_back(std::move(s));
  }
  return out;
}

/// The unital l-group (C_X, u) of integer functions on a finite multispace,
/// with unit the multiplicity function.
class SpeckerGroup {
 public:
  SpeckerGroup() = default;
  explicit SpeckerGroup(MultiSpace base) : base_(std::move(base)) {}

  const MultiSpace& base() const noexcept { return base_; }
  std::size_t dimension() const noexcept { return base_.size(); }

  friend bool operator==(const SpeckerGroup&, const SpeckerGroup&) = default;

 private:
  MultiSpace base_;
};

class GroupElement {
 public:
  GroupElement(SpeckerGroup group, std::vector<std::int64_t> values)
      : group_(std::move(group)), values_(std::move(values)) {
    if (values_.size() != group_.dimension()) {
      throw structure_error("element has " + std::to_string(values_.size()) + " values for a group over " +
                            std::to_string(group_.dimension()) + " points");
    }
  }

  const SpeckerGroup& group() const noexcept { return group_; }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t operator[](std::size_t i) const { return values_.at(i); }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  SpeckerGroup group_;
  std::vector<std::int64_t> values_;
};

inline GroupElement zero(const SpeckerGroup& g) { return GroupElement(g, std::vector<std::int64_t>(g.dimension(), 0)); }

inline GroupElement constant(const SpeckerGroup& g, std::int64_t v) {
  return GroupElement(g, std::vector<std::int64_t>(g.dimension(), v));
}

inline GroupElement unit(const SpeckerGroup& g) {
  std::vector<std::int64_t> v(g.dimension());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::to_signed(g.base().mult(i));
  return GroupElement(g, std::move(v));
}

inline GroupElement indicator(const SpeckerGroup& g, const PointSet& s) {
  if (s.size() != g.dimension()) throw structure_error("point set size does not match the group");
  std::vector<std::int64_t> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s[i] ? 1 : 0;
  return GroupElement(g, std::move(v));
}

inline GroupElement basis_element(const SpeckerGroup& g, std::size_t point) {
  PointSet s(g.dimension(), false);
  s.at(point) = true;
  return indicator(g, s);
}

namespace detail {

inline void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == b.group())) throw structure_error("operands belong to different groups");
}

template <class Op>
GroupElement pointwise(const GroupElement& a, const GroupElement& b, Op op) {
  require_same_group(a, b);
  std::vector<std::int64_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(a[i], b[i]);
  return GroupElement(a.group(), std::move(v));
}

template <class Op>
GroupElement pointwise(const GroupElement& a, Op op) {
  std::vector<std::int64_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(a[i]);
  return GroupElement(a.group(), std::move(v));
}

}  // namespace detail

inline GroupElement add(const GroupElement& a, const GroupElement& b) {
  return detail::pointwise(a, b, [](auto x, auto y) { return checked::add(x, y); });
}
inline GroupElement sub(const GroupElement& a, const GroupElement& b) {
  return detail::pointwise(a, b, [](auto x, auto y) { return checked::sub(x, y); });
}
inline GroupElement neg(const GroupElement& a) {
  return detail::pointwise(a, [](auto x) { return checked::neg(x); });
}
inline GroupElement meet(const GroupElement& a, const GroupElement& b) {
  return detail::pointwise(a, b, [](auto x, auto y) { return std::min(x, y); });
}
inline GroupElement join(const GroupElement& a, const GroupElement& b) {
  return detail::pointwise(a, b, [](auto x, auto y) { return std::max(x, y); });
}
inline GroupElement abs(const GroupElement& a) {
  return detail::pointwise(a, [](auto x) { return checked::abs(x); });
}
inline GroupElement scalar_mul(std::int64_t k, const GroupElement& a) {
  return detail::pointwise(a, [k](auto x) { return checked::mul(k, x); });
}

inline bool elem_leq(const GroupElement& a, const GroupElement& b) {
  detail::require_same_group(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool is_nonnegative(const GroupElement& a) {
  return std::all_of(a.values().begin(), a.values().end(), [](auto x) { return x >= 0; });
}

inline std::int64_t max_value(const GroupElement& a) {
  std::int64_t m = 0;
  for (auto x : a.values()) m = std::max(m, x);
  return m;
}

/// Every element f with lo <= f <= hi, odometer order (last point fastest).
inline std::vector<GroupElement> elements_between(const GroupElement& lo, const GroupElement& hi) {
  detail::require_same_group(lo, hi);
  if (!elem_leq(lo, hi)) return {};
  std::vector<GroupElement> out;
  std::vector<std::int64_t> cur(lo.values().begin(), lo.values().end());
  while (true) {
    out.emplace_back(lo.group(), cur);
    std::size_t k = cur.size();
    while (true) {
      if (k == 0) return out;
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
    }
  }
}

// ---------------------------------------------------------------------------
// Singular elements

/// {0,1}-valued test.
inline bool is_singular(const GroupElement& f) {
  return std::all_of(f.values().begin(), f.values().end(), [](auto x) { return x == 0 || x == 1; });
}

/// s >= 0 and a meet (s - a) == 0 for every 0 <= a <= s. Enumerates the
/// whole order interval, so only usable on small elements.
inline bool is_singular_by_definition(const GroupElement& s) {
  if (!is_nonnegative(s)) return false;
  const auto z = zero(s.group());
  for (const auto& a : elements_between(z, s)) {
    if (!(meet(a, sub(s, a)) == z)) return false;
  }
  return true;
}

inline GroupElement greatest_singular(const SpeckerGroup& g) { return constant(g, 1); }

/// Points where a singular element equals 1.
inline PointSet supp(const GroupElement& s) {
  if (!is_singular(s)) throw domain_error("supp requires a singular element");
  PointSet out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] == 1;
  return out;
}

// ---------------------------------------------------------------------------
// Maximal ideals and the natural representation

/// The maximal ideal m_x = {g : g(x) = 0}.
class MaximalIdeal {
 public:
  MaximalIdeal(SpeckerGroup group, std::size_t point) : group_(std::move(group)), point_(point) {
    if (point_ >= group_.dimension()) throw structure_error("maximal ideal point out of range");
  }

  const SpeckerGroup& group() const noexcept { return group_; }
  std::size_t point() const noexcept { return point_; }
  const std::string& label() const { return group_.base().label(point_); }

  bool contains(const GroupElement& g) const {
    if (!(g.group() == group_)) throw structure_error("element belongs to a different group");
    return g[point_] == 0;
  }

  friend bool operator==(const MaximalIdeal&, const MaximalIdeal&) = default;

 private:
  SpeckerGroup group_;
  std::size_t point_;
};

/// Maximal ideals in canonical base-point order.
inline std::vector<MaximalIdeal> maxspec(const SpeckerGroup& g) {
  std::vector<MaximalIdeal> out;
  for (std::size_t i = 0; i < g.dimension(); ++i) out.emplace_back(g, i);
  return out;
}

/// rho_m(g): the unique l-homomorphism onto Z with kernel m, i.e. evaluation.
inline std::int64_t rho(const MaximalIdeal& m, const GroupElement& g) {
  if (!(g.group() == m.group())) throw structure_error("element belongs to a different group");
  return g[m.point()];
}

/// rho_m(g) as the unique j with g - j*s in m, scanning j over [-M, M] with
/// M = max|g| * max(u).
inline std::int64_t rho_by_translation(const MaximalIdeal& m, const GroupElement& g) {
  if (!(g.group() == m.group())) throw structure_error("element belongs to a different group");
  const auto s = greatest_singular(g.group());
  const std::int64_t bound = checked::mul(max_value(abs(g)), checked::to_signed(std::max<std::uint64_t>(g.group().base().max_mult(), 1)));
  std::optional<std::int64_t> found;
  for (std::int64_t j = -bound; j <= bound; ++j) {
    if (m.contains(sub(g, scalar_mul(j, s)))) {
      if (found) throw domain_error("translation characterization is not unique");
      found = j;
    }
  }
  if (!found) throw domain_error("no translate of the greatest singular element lands in the ideal");
  return *found;
}

/// g^natural on the canonical maxspec listing.
inline std::vector<std::int64_t> natural(const GroupElement& g) {
  std::vector<std::int64_t> out;
  out.reserve(g.size());
  for (const auto& m : maxspec(g.group())) out.push_back(rho(m, g));
  return out;
}

// ---------------------------------------------------------------------------
// Ideals via closed zero sets

/// The ideal {g : g vanishes on zeroset}. An empty zeroset is the improper
/// ideal, the full base is the zero ideal.
class ClosedSetIdeal {
 public:
  ClosedSetIdeal(SpeckerGroup group, PointSet zeroset) : group_(std::move(group)), zeroset_(std::move(zeroset)) {
    if (zeroset_.size() != group_.dimension()) throw structure_error("zero set size does not match the group");
  }

  const SpeckerGroup& group() const noexcept { return group_; }
  const PointSet& zeroset() const noexcept { return zeroset_; }

  bool contains(const GroupElement& g) const {
    if (!(g.group() == group_)) throw structure_error("element belongs to a different group");
    for (std::size_t i = 0; i < zeroset_.size(); ++i)
      if (zeroset_[i] && g[i] != 0) return false;
    return true;
  }

  bool is_proper() const { return std::any_of(zeroset_.begin(), zeroset_.end(), [](bool b) { return b; }); }

  /// Indicators of the points off the zero set; they generate the ideal.
  std::vector<GroupElement> generators() const {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < zeroset_.size(); ++i)
      if (!zeroset_[i]) out.push_back(basis_element(group_, i));
    return out;
  }

  friend bool operator==(const ClosedSetIdeal&, const ClosedSetIdeal&) = default;

 private:
  SpeckerGroup group_;
  PointSet zeroset_;
};

inline ClosedSetIdeal ideal_from_zeroset(const SpeckerGroup& g, PointSet zeroset) {
  return ClosedSetIdeal(g, std::move(zeroset));
}

/// The ideal generated by the given elements, represented by their common
/// zero set.
inline ClosedSetIdeal zeroset_from_ideal(const SpeckerGroup& g, std::span<const GroupElement> generators) {
  PointSet z(g.dimension(), true);
  for (const auto& e : generators) {
    if (!(e.group() == g)) throw structure_error("generator belongs to a different group");
    for (std::size_t i = 0; i < z.size(); ++i)
      if (e[i] != 0) z[i] = false;
  }
  return ClosedSetIdeal(g, std::move(z));
}

/// Ideal inclusion a <= b tested on the generators of a.
inline bool ideal_contained(const ClosedSetIdeal& a, const ClosedSetIdeal& b) {
  for (const auto& e : a.generators())
    if (!b.contains(e)) return false;
  return true;
}

inline bool is_maximal(const ClosedSetIdeal& ideal) {
  return std::count(ideal.zeroset().begin(), ideal.zeroset().end(), true) == 1;
}

/// The characterization "u not in j, and for every a not in j some n >= 0
/// has (u - n|a|) v 0 in j", with a ranging over the box |a| <= max(u) and
/// n over 0..max(u).
inline bool is_maximal_by_criterion(const ClosedSetIdeal& ideal) {
  const auto& g = ideal.group();
  const auto u = unit(g);
  if (ideal.contains(u)) return false;
  const std::int64_t bound = checked::to_signed(std::max<std::uint64_t>(g.base().max_mult(), 1));
  const auto z = zero(g);
  for (const auto& a : elements_between(constant(g, -bound), constant(g, bound))) {
    if (ideal.contains(a)) continue;
    bool witnessed = false;
    for (std::int64_t n = 0; n <= bound && !witnessed; ++n) {
      witnessed = ideal.contains(join(sub(u, scalar_mul(n, abs(a))), z));
    }
    if (!witnessed) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hyperarchimedean witness

/// Least n >= 0 with n*f meet g == (n+1)*f meet g, for f, g >= 0.
inline std::int64_t hyperarch_witness(const GroupElement& f, const GroupElement& g) {
  detail::require_same_group(f, g);
  if (!is_nonnegative(f) || !is_nonnegative(g)) throw domain_error("hyperarchimedean witness requires f, g >= 0");
  const auto bound = max_value(g);
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (meet(scalar_mul(n, f), g) == meet(scalar_mul(n + 1, f), g)) return n;
  }
  throw domain_error("no hyperarchimedean witness below max(g)");
}

// ---------------------------------------------------------------------------
// Unital l-homomorphisms in matrix form

/// Why a matrix fails to be a unital l-homomorphism C_V -> C_W.
struct LHomDefect {
  bool structural = false;  // dimension mismatch rather than a mathematical violation
  std::string message;
};

/// Checks the matrix invariants; nullopt when the matrix is valid.
inline std::optional<LHomDefect> lhom_defect(const IntMatrix& matrix, const SpeckerGroup& dom,
                                             const SpeckerGroup& cod) {
  if (matrix.rows() != cod.dimension() || matrix.cols() != dom.dimension()) {
    return LHomDefect{true, "matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                                ", expected " + std::to_string(cod.dimension()) + "x" +
                                std::to_string(dom.dimension())};
  }
  const auto& wb = cod.base();
  const auto& vb = dom.base();
  for (std::size_t w = 0; w < matrix.rows(); ++w) {
    std::optional<std::size_t> pos;
    for (std::size_t v = 0; v < matrix.cols(); ++v) {
      const auto k = matrix(w, v);
      if (k < 0) return LHomDefect{false, "negative entry in row '" + wb.label(w) + "'"};
      if (k == 0) continue;
      if (pos) return LHomDefect{false, "row '" + wb.label(w) + "' has two positive entries"};
      pos = v;
    }
    if (!pos) return LHomDefect{false, "row '" + wb.label(w) + "' has no positive entry"};
    // With a single positive entry k at column v, unit preservation reads
    // k * u_V(v) == u_W(w).
    std::uint64_t image = 0;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(matrix(w, *pos)), vb.mult(*pos), &image) ||
        image != wb.mult(w)) {
      return LHomDefect{false, "unit not preserved at '" + wb.label(w) + "': " + std::to_string(matrix(w, *pos)) +
                                   " * " + std::to_string(vb.mult(*pos)) + " != " + std::to_string(wb.mult(w))};
    }
  }
  return std::nullopt;
}

/// A unital l-homomorphism C_V -> C_W stored as its nonnegative matrix:
/// rows indexed by W points, columns by V points, one positive entry per
/// row, and matrix * u_V == u_W.
class LHom {
 public:
  LHom(SpeckerGroup dom, SpeckerGroup cod, IntMatrix matrix)
      : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
    if (auto defect = lhom_defect(matrix_, dom_, cod_)) {
      if (defect->structural) throw structure_error(defect->message);
      throw domain_error(defect->message);
    }
    column_.resize(matrix_.rows());
    for (std::size_t w = 0; w < matrix_.rows(); ++w) {
      for (std::size_t v = 0; v < matrix_.cols(); ++v)
        if (matrix_(w, v) > 0) column_[w] = v;
    }
  }

  const SpeckerGroup& dom() const noexcept { return dom_; }
  const SpeckerGroup& cod() const noexcept { return cod_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  /// Column holding the positive entry of row w: the decoded point map.
  std::size_t column_of(std::size_t w) const { return column_.at(w); }
  /// The positive entry of row w: the decoded multiplicity.
  std::int64_t factor(std::size_t w) const { return matrix_(w, column_.at(w)); }

  friend bool operator==(const LHom& a, const LHom& b) {
    return a.matrix_ == b.matrix_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  SpeckerGroup dom_;
  SpeckerGroup cod_;
  IntMatrix matrix_;
  std::vector<std::size_t> column_;
};

inline LHom validate_lhom(IntMatrix matrix, const SpeckerGroup& dom, const SpeckerGroup& cod) {
  return LHom(dom, cod, std::move(matrix));
}

inline GroupElement apply_lhom(const LHom& h, const GroupElement& f) {
  if (!(f.group() == h.dom())) throw structure_error("element does not belong to the domain of the homomorphism");
  return GroupElement(h.cod(), h.matrix() * f.values());
}

inline LHom identity_lhom(const SpeckerGroup& g) { return LHom(g, g, IntMatrix::identity(g.dimension())); }

/// second after first.
inline LHom compose(const LHom& first, const LHom& second) {
  if (!(first.cod() == second.dom())) throw structure_error("cannot compose homomorphisms: object mismatch");
  return LHom(first.dom(), second.cod(), second.matrix() * first.matrix());
}

/// The homomorphism is bijective: a permutation matrix.
inline bool is_lhom_isomorphism(const LHom& h) {
  if (h.dom().dimension() != h.cod().dimension()) return false;
  std::vector<bool> hit(h.dom().dimension(), false);
  for (std::size_t w = 0; w < h.cod().dimension(); ++w) {
    if (h.factor(w) != 1 || hit[h.column_of(w)]) return false;
    hit[h.column_of(w)] = true;
  }
  return true;
}

inline LHom inverse(const LHom& h) {
  if (!is_lhom_isomorphism(h)) throw domain_error("homomorphism is not an isomorphism");
  return LHom(h.cod(), h.dom(), h.matrix().transposed());
}

/// Reads the point map and multiplicities off the rows: the morphism
/// cod.base -> dom.base whose image under S is h.
inline BmsMorphism lhom_to_bms(const LHom& h) {
  std::vector<std::size_t> gamma(h.cod().dimension());
  for (std::size_t w = 0; w < gamma.size(); ++w) gamma[w] = h.column_of(w);
  BmsMorphism m(h.cod().base(), h.dom().base(), std::move(gamma));
  for (std::size_t w = 0; w < m.dom().size(); ++w) {
    if (static_cast<std::int64_t>(m.zeta(w)) != h.factor(w)) {
      throw domain_error("row factor does not match the multiplicity quotient");
    }
  }
  return m;
}

}  // namespace specker
