#include <catch_amalgamated.hpp>

#include <random>

#include "specker/laws.hpp"
#include "specker/omega.hpp"

using namespace specker;
using namespace specker::omega;

namespace {
ECSeq seq(std::vector<std::int64_t> p, std::int64_t t) { return ECSeq(std::move(p), t); }
}  // namespace

TEST_CASE("canonical form and evaluation") {
  const auto s = seq({5, 2, 2}, 2);
  CHECK(s.prefix() == std::vector<std::int64_t>{5});
  CHECK(ECSeq(s.prefix(), s.tail()) == s);
  CHECK(s.value(0) == 5);
  CHECK(s.value(100) == 2);
  CHECK(ec_value(seq({5}, 2), OmegaPoint::infinity()) == 2);
  CHECK(ec_value(seq({5}, 2), OmegaPoint::at(0)) == 5);
  CHECK_THROWS_AS(OmegaPoint::infinity().index(), domain_error);
  CHECK(seq({0, 0}, 0) == ECSeq::constant(0));
}

TEST_CASE("pointwise operations") {
  CHECK(add(ECSeq::constant(1), ECSeq::constant(1)) == ECSeq::constant(2));
  CHECK(meet(ECSeq::indicator({0}), ECSeq::indicator({1})) == ECSeq::constant(0));
  CHECK(join(ECSeq::indicator({0}), ECSeq::indicator({2})) == seq({1, 0, 1}, 0));
  CHECK(sub(seq({3}, 1), ECSeq::constant(1)) == seq({2}, 0));
  CHECK(neg(seq({1}, -1)) == seq({-1}, 1));
  CHECK(scalar_mul(3, seq({1, 2}, 0)) == seq({3, 6}, 0));
  CHECK_THROWS_AS(scalar_mul(INT64_MAX, ECSeq::constant(2)), overflow_error);
}

TEST_CASE("operations return canonical forms and agree pointwise") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_sequence(rng, 5, -2, 2);
    const auto b = random_sequence(rng, 5, -2, 2);
    for (const auto& [c, op] : std::vector<std::pair<ECSeq, int>>{{add(a, b), 0}, {meet(a, b), 1}, {join(a, b), 2}}) {
      CHECK((c.prefix().empty() || c.prefix().back() != c.tail()));
      for (std::size_t n = 0; n < 8; ++n) {
        const auto x = a.value(n), y = b.value(n);
        CHECK(c.value(n) == (op == 0 ? x + y : op == 1 ? std::min(x, y) : std::max(x, y)));
      }
      CHECK(ec_value(c, OmegaPoint::infinity()) == c.tail());
    }
  }
}

TEST_CASE("singular sequences") {
  CHECK(ec_is_singular(ECSeq::constant(1)));
  CHECK(ec_is_singular(seq({1, 0, 1}, 0)));
  CHECK_FALSE(ec_is_singular(ECSeq::constant(2)));
  // Singulars are a lattice; finite indicators are closed and span tail 0.
  const auto bin = all_binary_sequences(4);
  for (const auto& a : bin)
    for (const auto& b : bin) {
      CHECK(ec_is_singular(meet(a, b)));
      CHECK(ec_is_singular(join(a, b)));
      if (a.tail() == 0 && b.tail() == 0) {
        CHECK(meet(a, b).tail() == 0);
        CHECK(join(a, b).tail() == 0);
        CHECK(add(a, scalar_mul(-3, b)).tail() == 0);
      }
    }
}

TEST_CASE("sequence universes") {
  // 2^L * 2 raw choices per prefix length collapse to 2^(max+1) canonical ones.
  CHECK(all_binary_sequences(0).size() == 2);
  CHECK(all_binary_sequences(6).size() == 128);
  CHECK(all_bounded_sequences(2, 2).size() == 27);
  const auto below = sequences_below(seq({2, 0}, 1), 2);
  CHECK(below.size() == 3 * 1 * 2);
}

TEST_CASE("membership examples") {
  std::vector<ECSeq> finite;
  for (std::uint64_t mask = 1; mask < 64; ++mask) {
    std::set<std::size_t> pts;
    for (std::size_t i = 0; i < 6; ++i)
      if (mask >> i & 1u) pts.insert(i);
    finite.push_back(ECSeq::indicator(pts));
  }
  const auto r = subgroup_membership(ECSeq::constant(2), finite);
  CHECK_FALSE(r.member);
  REQUIRE(r.certificate);
  CHECK(r.certificate->tail_only());
  CHECK(r.certificate->modulus == 0);
  CHECK(certificate_is_valid(*r.certificate));
  CHECK(r.certificate->target_value == 2 * r.certificate->functional.back());

  const auto z = subgroup_membership(ECSeq::constant(0), finite);
  CHECK(z.member);
  for (auto c : z.coefficients) CHECK(c == 0);

  const auto three = subgroup_membership(seq({3}, 0), {ECSeq::indicator({0})});
  REQUIRE(three.member);
  CHECK(three.coefficients == std::vector<std::int64_t>{3});

  // A parity obstruction: 2 * e_0 spans only even values at 0.
  const auto odd = subgroup_membership(seq({1}, 0), {seq({2}, 0)});
  CHECK_FALSE(odd.member);
  CHECK(odd.certificate->modulus == 2);
  CHECK(certificate_is_valid(*odd.certificate));
}

TEST_CASE("membership agrees with bounded coefficient search") {
  std::size_t positives = 0;
  for (const auto& inst : laws::random_membership_instances(11, 200)) {
    const auto res = subgroup_membership(inst.target, inst.generators);
    const auto found = laws::membership_by_search(inst.target, inst.generators, 5);
    if (found) CHECK(res.member);
    if (res.member) {
      ++positives;
      CHECK(combination(inst.generators, res.coefficients) == inst.target);
    } else {
      CHECK_FALSE(found);
      REQUIRE(res.certificate);
      CHECK(certificate_is_valid(*res.certificate));
    }
  }
  CHECK(positives >= 100);
}

TEST_CASE("H is a unital l-subgroup that is not Specker") {
  const auto r = verify_H_not_specker(0);
  CHECK(r.closed);
  CHECK(r.singulars_finite_support);
  CHECK_FALSE(r.unit_generated);
  CHECK(r.certificate_valid);
  CHECK(r.certificate_tail_only);
  CHECK(r.unit_generated_in_full_group);
  CHECK(r.singulars_found == 64);
  CHECK(r.failures.empty());
  CHECK(r.pass());
  CHECK(verify_H_not_specker(99).pass());
}

TEST_CASE("singularity inside H by the definition") {
  CHECK(is_singular_in_H(ECSeq::indicator({0, 3})));
  CHECK_FALSE(is_singular_in_H(ECSeq::constant(1)));  // not in H
  CHECK_FALSE(is_singular_in_H(ECSeq::constant(2)));
  CHECK_FALSE(is_singular_in_H(seq({2}, 0)));
  CHECK_FALSE(is_singular_in_H(seq({1}, 2)));
}

TEST_CASE("countable power discontinuity witness") {
  const auto r = discontinuity_witness_power(10);
  REQUIRE(r.rows.size() == 11);
  for (const auto& row : r.rows) {
    CHECK(row.lcm == 2);
    CHECK(row.point.tail() == 2);
    CHECK(row.point.prefix().size() == row.k);
  }
  CHECK(r.limit_lcm == 1);
  CHECK(r.all_b_lcm == 2);
  CHECK(r.pass());
}

TEST_CASE("pushout forced multiplicities") {
  const auto r = pushout_obstruction(16);
  CHECK(r.forced_at_infinity == 1);
  REQUIRE(r.forced.size() == 17);
  for (auto v : r.forced) CHECK(v == 2);
  CHECK_FALSE(r.representable);
  CHECK(r.min_prefix_len.back() == 17);
  CHECK(r.pass());

  const auto r0 = pushout_obstruction(0);
  CHECK(r0.forced == std::vector<std::int64_t>{2});
  CHECK(r0.forced_at_infinity == 1);
  CHECK(r0.pass());

  CHECK(comparison_multiplicity(3) == seq({1, 1, 1, 2}, 1));
}

TEST_CASE("hyperarchimedean witness on sequences") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto f = random_sequence(rng, 4, 0, 3);
    const auto g = random_sequence(rng, 4, 0, 3);
    const auto n = ec_hyperarch_witness(f, g);
    CHECK(n <= max_value(g));
    CHECK(meet(scalar_mul(n, f), g) == meet(scalar_mul(n + 1, f), g));
  }
  CHECK_THROWS_AS(ec_hyperarch_witness(ECSeq::constant(-1), ECSeq::constant(1)), domain_error);
}
