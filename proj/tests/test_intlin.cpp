#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "specker/intlin.hpp"

using namespace specker;

namespace {

bool is_unimodular(const IntMatrix& m) {
  // Only used on small examples: determinant by cofactor expansion.
  std::function<std::int64_t(const IntMatrix&)> det = [&](const IntMatrix& a) -> std::int64_t {
    const auto n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    std::int64_t s = 0;
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r)
        for (std::size_t k = 0, kk = 0; k < n; ++k)
          if (k != c) minor(r - 1, kk++) = a(r, k);
      s += (c % 2 ? -1 : 1) * a(0, c) * det(minor);
    }
    return s;
  };
  const auto d = det(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith normal form of a known matrix") {
  const auto a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 6);
  CHECK(s.d(2, 2) == 12);
  CHECK(s.rank == 3);
  CHECK(is_unimodular(s.u));
  CHECK(is_unimodular(s.v));
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> val(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int t = 0; t < 300; ++t) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = val(rng);
    const auto s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.d(i, i) > 0);
  }
}

TEST_CASE("integer systems: solutions and certificates") {
  // 2x = 3 has no integer solution; the certificate works modulo 2.
  const auto a = IntMatrix::from_rows({{2}});
  const std::vector<std::int64_t> b{3};
  const auto sol = solve_integer_system(a, b);
  REQUIRE_FALSE(sol.solvable);
  REQUIRE(sol.certificate);
  CHECK(sol.certificate->modulus == 2);

  const auto a2 = IntMatrix::from_rows({{1, 1}, {0, 2}});
  const std::vector<std::int64_t> b2{5, 4};
  const auto s2 = solve_integer_system(a2, b2);
  REQUIRE(s2.solvable);
  CHECK(a2 * std::span<const std::int64_t>(s2.coefficients) == b2);

  // Inconsistent over the rationals: the certificate is exact (modulus 0).
  const auto a3 = IntMatrix::from_rows({{1}, {1}});
  const std::vector<std::int64_t> b3{1, 2};
  const auto s3 = solve_integer_system(a3, b3);
  REQUIRE_FALSE(s3.solvable);
  CHECK(s3.certificate->modulus == 0);
  const auto& w = s3.certificate->functional;
  CHECK(w[0] * 1 + w[1] * 1 == 0);
  CHECK(w[0] * 1 + w[1] * 2 != 0);
}
