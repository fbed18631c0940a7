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

namespace specker {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// From nested rows; every row must have the same length. An empty row
  /// list gives a 0 x cols matrix.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty = 0) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw structure_error("ragged matrix: row " + std::to_string(r) + " has wrong length");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(dst, c) = checked::add((*this)(dst, c), checked::mul(k, (*this)(src, c)));
  }
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t r = 0; r < rows_; ++r)
      (*this)(r, dst) = checked::add((*this)(r, dst), checked::mul(k, (*this)(r, src)));
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked::neg((*this)(r, c));
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw structure_error("matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
    }
  return out;
}

inline std::vector<std::int64_t> operator*(const IntMatrix& a, std::span<const std::int64_t> v) {
  if (a.cols() != v.size()) throw structure_error("matrix-vector dimension mismatch");
  std::vector<std::int64_t> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = checked::add(out[i], checked::mul(a(i, k), v[k]));
  return out;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... and
/// nonnegative diagonal. rank is the number of nonzero diagonal entries.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;
};

inline SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero in the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (!best || checked::abs(a(i, j)) < checked::abs(a(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    a.swap_rows(t, best->first);
    u.swap_rows(t, best->first);
    a.swap_cols(t, best->second);
    v.swap_cols(t, best->second);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const auto q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, checked::neg(q));
        u.add_row_multiple(i, t, checked::neg(q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const auto q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, checked::neg(q));
        v.add_col_multiple(j, t, checked::neg(q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && checked::abs(a(i, t)) < checked::abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && checked::abs(a(t, j)) < checked::abs(a(bi, bj))) bi = t, bj = j;
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      a.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v), t};
}

/// Proof that b is not an integer combination of the columns of A: an
/// integer functional w with w.A === 0 (mod modulus) column-wise but
/// w.b !== 0 (mod modulus). modulus == 0 means exact equality.
struct LatticeCertificate {
  std::vector<std::int64_t> functional;
  std::int64_t modulus = 0;
  std::int64_t target_value = 0;
};

struct LatticeSolution {
  bool solvable = false;
  std::vector<std::int64_t> coefficients;          // A * coefficients == b when solvable
  std::optional<LatticeCertificate> certificate;   // set when not solvable
};

/// Decides A c = b over the integers by Smith normal form.
inline LatticeSolution solve_integer_system(const IntMatrix& a, std::span<const std::int64_t> b) {
  if (b.size() != a.rows()) throw structure_error("right-hand side has wrong length");
  const SmithForm snf = smith_normal_form(a);
  const auto ub = snf.u * b;
  std::vector<std::int64_t> y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::int64_t d = i < snf.rank ? snf.d(i, i) : 0;
    const bool ok = d == 0 ? ub[i] == 0 : ub[i] % d == 0;
    if (!ok) {
      LatticeCertificate cert;
      cert.functional.assign(snf.u.row(i).begin(), snf.u.row(i).end());
      cert.modulus = d;
      cert.target_value = ub[i];
      return LatticeSolution{false, {}, std::move(cert)};
    }
    if (d != 0) y[i] = ub[i] / d;
  }
  return LatticeSolution{true, snf.v * std::span<const std::int64_t>(y), std::nullopt};
}

}  // namespace specker
