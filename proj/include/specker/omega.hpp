#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specker/checked.hpp"
#include "specker/error.hpp"
#include "specker/intlin.hpp"

// Continuous integer functions on the one-point compactification of the
// naturals, represented exactly as eventually constant sequences.
namespace specker::omega {

/// A natural number or the accumulation point.
class OmegaPoint {
 public:
  static OmegaPoint at(std::size_t n) { return OmegaPoint(n); }
  static OmegaPoint infinity() { return OmegaPoint(std::nullopt); }

  bool is_infinity() const noexcept { return !index_; }
  std::size_t index() const {
    if (!index_) throw domain_error("the accumulation point has no index");
    return *index_;
  }

  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;

 private:
  explicit OmegaPoint(std::optional<std::size_t> i) : index_(i) {}
  std::optional<std::size_t> index_;
};

/// value(n) = prefix[n] for n < |prefix|, otherwise tail; value(inf) = tail.
/// Always canonical: the last prefix entry differs from the tail.
class ECSeq {
 public:
  ECSeq() = default;
  ECSeq(std::vector<std::int64_t> prefix, std::int64_t tail) : prefix_(std::move(prefix)), tail_(tail) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
  }

  static ECSeq constant(std::int64_t v) { return ECSeq({}, v); }

  /// Indicator of a finite set of naturals.
  static ECSeq indicator(const std::set<std::size_t>& points) {
    if (points.empty()) return constant(0);
    std::vector<std::int64_t> p(*points.rbegin() + 1, 0);
    for (auto n : points) p[n] = 1;
    return ECSeq(std::move(p), 0);
  }

  const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
  std::int64_t tail() const noexcept { return tail_; }

  std::int64_t value(std::size_t n) const { return n < prefix_.size() ? prefix_[n] : tail_; }
  std::int64_t value(const OmegaPoint& p) const { return p.is_infinity() ? tail_ : value(p.index()); }

  /// Coordinates 0..len-1 followed by the tail; requires len >= |prefix|.
  std::vector<std::int64_t> coordinates(std::size_t len) const {
    if (len < prefix_.size()) throw structure_error("coordinate window shorter than the prefix");
    std::vector<std::int64_t> c(len + 1);
    for (std::size_t i = 0; i < len; ++i) c[i] = value(i);
    c[len] = tail_;
    return c;
  }

  friend bool operator==(const ECSeq&, const ECSeq&) = default;
  friend auto operator<=>(const ECSeq&, const ECSeq&) = default;

 private:
  std::vector<std::int64_t> prefix_;
  std::int64_t tail_ = 0;
};

inline std::int64_t ec_value(const ECSeq& a, const OmegaPoint& p) { return a.value(p); }

namespace detail {

template <class Op>
ECSeq zip(const ECSeq& a, const ECSeq& b, Op op) {
  const std::size_t n = std::max(a.prefix().size(), b.prefix().size());
  std::vector<std::int64_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = op(a.value(i), b.value(i));
  return ECSeq(std::move(p), op(a.tail(), b.tail()));
}

template <class Op>
ECSeq map(const ECSeq& a, Op op) {
  std::vector<std::int64_t> p(a.prefix().size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = op(a.prefix()[i]);
  return ECSeq(std::move(p), op(a.tail()));
}

}  // namespace detail

inline ECSeq add(const ECSeq& a, const ECSeq& b) {
  return detail::zip(a, b, [](auto x, auto y) { return checked::add(x, y); });
}
inline ECSeq sub(const ECSeq& a, const ECSeq& b) {
  return detail::zip(a, b, [](auto x, auto y) { return checked::sub(x, y); });
}
inline ECSeq neg(const ECSeq& a) {
  return detail::map(a, [](auto x) { return checked::neg(x); });
}
inline ECSeq meet(const ECSeq& a, const ECSeq& b) {
  return detail::zip(a, b, [](auto x, auto y) { return std::min(x, y); });
}
inline ECSeq join(const ECSeq& a, const ECSeq& b) {
  return detail::zip(a, b, [](auto x, auto y) { return std::max(x, y); });
}
inline ECSeq scalar_mul(std::int64_t k, const ECSeq& a) {
  return detail::map(a, [k](auto x) { return checked::mul(k, x); });
}

inline bool leq(const ECSeq& a, const ECSeq& b) {
  const std::size_t n = std::max(a.prefix().size(), b.prefix().size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.value(i) > b.value(i)) return false;
  return a.tail() <= b.tail();
}

inline std::int64_t max_value(const ECSeq& a) {
  std::int64_t m = a.tail();
  for (auto v : a.prefix()) m = std::max(m, v);
  return m;
}

/// All values lie in {0, 1}: indicators of finite (tail 0) or cofinite
/// (tail 1) sets.
inline bool ec_is_singular(const ECSeq& a) {
  auto bit = [](std::int64_t v) { return v == 0 || v == 1; };
  return bit(a.tail()) && std::all_of(a.prefix().begin(), a.prefix().end(), bit);
}

/// Least n >= 0 with n*f meet g == (n+1)*f meet g, for f, g >= 0.
inline std::int64_t ec_hyperarch_witness(const ECSeq& f, const ECSeq& g) {
  const ECSeq z = ECSeq::constant(0);
  if (!leq(z, f) || !leq(z, g)) throw domain_error("hyperarchimedean witness requires f, g >= 0");
  for (std::int64_t n = 0; n <= max_value(g); ++n) {
    if (meet(scalar_mul(n, f), g) == meet(scalar_mul(n + 1, f), g)) return n;
  }
  throw domain_error("no hyperarchimedean witness below max(g)");
}

// ---------------------------------------------------------------------------
// Subgroup membership

/// A linear functional on the coordinates (positions 0..N-1, then the tail)
/// that is == 0 (mod modulus) on every generator but not on the target.
struct MembershipCertificate {
  std::vector<std::int64_t> functional;
  std::int64_t modulus = 0;  // 0: exact equality
  std::int64_t target_value = 0;
  std::vector<std::int64_t> generator_values;

  /// True when the functional only reads the tail coordinate.
  bool tail_only() const {
    return !functional.empty() && functional.back() != 0 &&
           std::all_of(functional.begin(), functional.end() - 1, [](auto v) { return v == 0; });
  }
};

struct MembershipResult {
  bool member = false;
  std::vector<std::int64_t> coefficients;
  std::optional<MembershipCertificate> certificate;
  std::size_t window = 0;  // N: the number of explicit positions
};

inline std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

/// Decides whether target is an integer combination of the generators. All
/// sequences are determined by positions 0..N-1 and the tail, where N is the
/// longest prefix involved; the resulting system is solved by Smith normal
/// form.
inline MembershipResult subgroup_membership(const ECSeq& target, const std::vector<ECSeq>& generators) {
  std::size_t n = target.prefix().size();
  for (const auto& g : generators) n = std::max(n, g.prefix().size());
  IntMatrix a(n + 1, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const auto c = generators[j].coordinates(n);
    for (std::size_t i = 0; i <= n; ++i) a(i, j) = c[i];
  }
  const auto b = target.coordinates(n);
  auto sol = solve_integer_system(a, b);
  MembershipResult r;
  r.window = n;
  r.member = sol.solvable;
  if (sol.solvable) {
    r.coefficients = std::move(sol.coefficients);
    return r;
  }
  MembershipCertificate cert;
  cert.functional = std::move(sol.certificate->functional);
  cert.modulus = sol.certificate->modulus;
  cert.target_value = dot(cert.functional, b);
  for (const auto& g : generators) cert.generator_values.push_back(dot(cert.functional, g.coordinates(n)));
  r.certificate = std::move(cert);
  return r;
}

/// sum_j coefficients[j] * generators[j]
inline ECSeq combination(const std::vector<ECSeq>& generators, const std::vector<std::int64_t>& coefficients) {
  if (generators.size() != coefficients.size()) throw structure_error("coefficient count does not match generators");
  ECSeq s = ECSeq::constant(0);
  for (std::size_t j = 0; j < generators.size(); ++j) s = add(s, scalar_mul(coefficients[j], generators[j]));
  return s;
}

/// The certificate really separates target from the span.
inline bool certificate_is_valid(const MembershipCertificate& c) {
  auto vanishes = [&](std::int64_t v) { return c.modulus == 0 ? v == 0 : v % c.modulus == 0; };
  return std::all_of(c.generator_values.begin(), c.generator_values.end(), vanishes) && !vanishes(c.target_value);
}

// ---------------------------------------------------------------------------
// The subgroup H = {g : g(inf) even} with unit 2

inline bool in_H(const ECSeq& g) { return g.tail() % 2 == 0; }

/// Every sequence a with 0 <= a <= s pointwise and canonical prefix length
/// <= window, where window >= |prefix of s|.
inline std::vector<ECSeq> sequences_below(const ECSeq& s, std::size_t window) {
  const auto top = s.coordinates(window);
  if (std::any_of(top.begin(), top.end(), [](auto v) { return v < 0; }))
    throw domain_error("sequences_below needs a nonnegative bound");
  std::vector<std::int64_t> c(top.size(), 0);
  std::vector<ECSeq> out;
  while (true) {
    out.emplace_back(std::vector<std::int64_t>(c.begin(), c.end() - 1), c.back());
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] == top[i - 1]) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

/// s is singular relative to H: s in H, s >= 0, and a meet (s - a) == 0 for
/// every a in H with 0 <= a <= s. A violation at a position past the prefix
/// of s can be moved to position |prefix|, so a window of |prefix| + 1
/// positions suffices.
inline bool is_singular_in_H(const ECSeq& s) {
  if (!in_H(s) || !leq(ECSeq::constant(0), s)) return false;
  const ECSeq zero = ECSeq::constant(0);
  for (const auto& a : sequences_below(s, s.prefix().size() + 1)) {
    if (!in_H(a)) continue;
    if (!(meet(a, sub(s, a)) == zero)) return false;
  }
  return true;
}

/// Every sequence with values in 0..max_value and prefix length <= max_prefix,
/// each listed once in canonical form.
inline std::vector<ECSeq> all_bounded_sequences(std::size_t max_prefix, std::int64_t max_value) {
  std::set<ECSeq> seen;
  const ECSeq top = ECSeq::constant(max_value);
  for (const auto& a : sequences_below(top, max_prefix)) seen.insert(a);
  return {seen.begin(), seen.end()};
}

inline std::vector<ECSeq> all_binary_sequences(std::size_t max_prefix) { return all_bounded_sequences(max_prefix, 1); }

struct NotSpeckerReport {
  std::size_t closure_samples = 0;
  bool closed = true;
  std::size_t singulars_checked = 0;
  std::size_t singulars_found = 0;
  bool singulars_finite_support = true;
  bool unit_generated = true;
  std::optional<MembershipCertificate> certificate;
  bool certificate_valid = false;
  bool certificate_tail_only = false;
  bool unit_generated_in_full_group = false;
  std::vector<std::string> failures;

  bool pass() const {
    return closed && singulars_finite_support && !unit_generated && certificate_valid && certificate_tail_only &&
           unit_generated_in_full_group && failures.empty();
  }
};

inline ECSeq random_sequence(std::mt19937_64& rng, std::size_t max_prefix, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::size_t> len(0, max_prefix);
  std::uniform_int_distribution<std::int64_t> val(lo, hi);
  std::vector<std::int64_t> p(len(rng));
  for (auto& v : p) v = val(rng);
  return ECSeq(std::move(p), val(rng));
}

/// H is closed under the l-group operations (random sample), its singular
/// elements all have tail 0 (exhaustive over {0,1}-valued prefixes up to
/// max_prefix, plus {0,1,2}-valued prefixes up to 3), and the unit 2 is not
/// in the subgroup they generate.
inline NotSpeckerReport verify_H_not_specker(std::uint64_t seed = 0, std::size_t samples = 500,
                                             std::size_t max_prefix = 6) {
  NotSpeckerReport r;
  std::mt19937_64 rng(seed);
  auto sample_H = [&] {
    auto s = random_sequence(rng, 6, -4, 4);
    return in_H(s) ? s : ECSeq(s.prefix(), checked::mul(2, s.tail()));
  };
  std::uniform_int_distribution<std::int64_t> scalar(-3, 3);
  if (!in_H(ECSeq::constant(2))) r.failures.push_back("unit 2 is not in H");
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = sample_H();
    const auto b = sample_H();
    for (const auto& c : {add(a, b), sub(a, b), neg(a), meet(a, b), join(a, b), scalar_mul(scalar(rng), a)}) {
      ++r.closure_samples;
      if (!in_H(c)) r.closed = false;
    }
  }

  std::vector<ECSeq> singulars;
  for (const auto& s : all_binary_sequences(max_prefix)) {
    if (!in_H(s)) continue;
    ++r.singulars_checked;
    if (!is_singular_in_H(s)) {
      r.failures.push_back("a {0,1}-valued element of H failed the singularity quantifier");
      continue;
    }
    singulars.push_back(s);
    if (s.tail() != 0) r.singulars_finite_support = false;
  }
  r.singulars_found = singulars.size();
  // Values up to 2: the quantifier must reject everything that is not {0,1}-valued.
  for (const auto& s : all_bounded_sequences(3, 2)) {
    if (!in_H(s)) continue;
    ++r.singulars_checked;
    if (is_singular_in_H(s) != ec_is_singular(s)) r.failures.push_back("singularity tests disagree");
    if (is_singular_in_H(s) && s.tail() != 0) r.singulars_finite_support = false;
  }

  const auto res = subgroup_membership(ECSeq::constant(2), singulars);
  r.unit_generated = res.member;
  if (res.certificate) {
    r.certificate = res.certificate;
    r.certificate_valid = certificate_is_valid(*res.certificate);
    r.certificate_tail_only = res.certificate->tail_only();
  }

  // In the full group the cofinite indicators are singular too, and they
  // do generate the unit.
  const auto full = subgroup_membership(ECSeq::constant(2), all_binary_sequences(max_prefix));
  r.unit_generated_in_full_group =
      full.member && combination(all_binary_sequences(max_prefix), full.coefficients) == ECSeq::constant(2);
  return r;
}

// ---------------------------------------------------------------------------
// Countable power of ({a,b}, u(a)=1, u(b)=2)

struct PowerRow {
  std::size_t k;
  ECSeq point;        // a on coordinates < k, b from k on
  std::uint64_t lcm;  // multiplicity forced on the point
};

struct PowerReport {
  std::vector<PowerRow> rows;
  ECSeq limit_point;
  std::uint64_t limit_lcm = 0;
  std::uint64_t all_b_lcm = 0;
  bool pass() const {
    return !rows.empty() && limit_lcm == 1 && all_b_lcm == 2 &&
           std::all_of(rows.begin(), rows.end(), [](const PowerRow& r) { return r.lcm == 2; });
  }
};

/// LCM of every value a sequence takes.
inline std::uint64_t lcm_of_values(const ECSeq& s) {
  std::uint64_t v = static_cast<std::uint64_t>(s.tail());
  for (auto x : s.prefix()) v = checked::lcm(v, static_cast<std::uint64_t>(x));
  return v;
}

/// Points y_k of {a,b}^omega (encoded a=1, b=2) converge coordinatewise to
/// the all-a point, yet their LCM multiplicity stays 2 while the limit has 1.
inline PowerReport discontinuity_witness_power(std::size_t k_max = 10) {
  PowerReport r;
  for (std::size_t k = 0; k <= k_max; ++k) {
    ECSeq y(std::vector<std::int64_t>(k, 1), 2);
    r.rows.push_back(PowerRow{k, y, lcm_of_values(y)});
  }
  r.limit_point = ECSeq::constant(1);
  r.limit_lcm = lcm_of_values(r.limit_point);
  r.all_b_lcm = lcm_of_values(ECSeq::constant(2));
  return r;
}

// ---------------------------------------------------------------------------
// Missing pushout

struct PushoutReport {
  std::size_t bound = 0;
  std::int64_t forced_at_infinity = 0;
  std::vector<std::int64_t> forced;          // forced[n] for n <= bound
  std::vector<std::size_t> min_prefix_len;   // shortest canonical sequence matching forced[0..K'] with tail 1, K' <= bound
  bool comparison_legs_valid = true;
  bool representable = true;
  std::vector<std::string> failures;
  bool pass() const {
    return forced_at_infinity == 1 && !representable && comparison_legs_valid && failures.empty() &&
           std::all_of(forced.begin(), forced.end(), [](auto v) { return v == 2; });
  }
};

/// v_n: constantly 1 except the value 2 at n.
inline ECSeq comparison_multiplicity(std::size_t n) {
  std::vector<std::int64_t> p(n + 1, 1);
  p[n] = 2;
  return ECSeq(std::move(p), 1);
}

/// Replays the forced-multiplicity argument for a pushout P of
/// ({*},1) <- ({*},2) -> (alpha N, 2) with * |-> inf. For each point p the
/// candidate values of v(p) are filtered by:
///   - id : (alpha N, 2) -> P decreases multiplicity: v(p) | 2;
///   - (* |-> inf) : ({*},1) -> P: v(inf) | 1;
///   - c_n = id : P -> (alpha N, v_n), n <= bound: v_n(p) | v(p).
inline PushoutReport pushout_obstruction(std::size_t bound = 16) {
  PushoutReport r;
  r.bound = bound;
  const ECSeq big = ECSeq::constant(2);
  std::vector<ECSeq> comparisons;
  for (std::size_t n = 0; n <= bound; ++n) comparisons.push_back(comparison_multiplicity(n));

  // The comparison cocones: id from (alpha N, 2) and * |-> inf from ({*},1)
  // must themselves be morphisms into (alpha N, v_n).
  for (const auto& vn : comparisons) {
    const std::size_t w = vn.prefix().size();
    for (std::size_t i = 0; i <= w; ++i) {
      const auto at = i < w ? OmegaPoint::at(i) : OmegaPoint::infinity();
      if (big.value(at) % vn.value(at) != 0) r.comparison_legs_valid = false;
    }
    if (1 % vn.value(OmegaPoint::infinity()) != 0) r.comparison_legs_valid = false;
  }

  auto forced_value = [&](const OmegaPoint& p) -> std::int64_t {
    std::vector<std::int64_t> candidates;
    for (std::int64_t d = 1; d <= big.value(p); ++d) {
      if (big.value(p) % d != 0) continue;
      if (p.is_infinity() && 1 % d != 0) continue;
      bool ok = true;
      for (const auto& vn : comparisons) ok = ok && d % vn.value(p) == 0;
      if (ok) candidates.push_back(d);
    }
    if (candidates.size() != 1) {
      r.failures.push_back("constraints do not force a unique multiplicity");
      return 0;
    }
    return candidates.front();
  };

  r.forced_at_infinity = forced_value(OmegaPoint::infinity());
  for (std::size_t n = 0; n <= bound; ++n) r.forced.push_back(forced_value(OmegaPoint::at(n)));

  // Any eventually constant v has v(inf) as its tail, so it can match the
  // forced values on 0..K' only with a prefix of length K'+1, for every K'.
  for (std::size_t k = 0; k <= bound; ++k) {
    const ECSeq candidate(std::vector<std::int64_t>(r.forced.begin(), r.forced.begin() + static_cast<std::ptrdiff_t>(k + 1)),
                          r.forced_at_infinity);
    r.min_prefix_len.push_back(candidate.prefix().size());
  }
  bool strictly_growing = true;
  for (std::size_t k = 0; k < r.min_prefix_len.size(); ++k) strictly_growing = strictly_growing && r.min_prefix_len[k] == k + 1;
  // Forced values at the isolated points never agree with the value at the
  // accumulation point, so no prefix length suffices.
  const bool tail_disagrees = std::all_of(r.forced.begin(), r.forced.end(), [&](auto v) { return v != r.forced_at_infinity; });
  r.representable = !(strictly_growing && tail_disagrees);
  return r;
}

}  // namespace specker::omega
