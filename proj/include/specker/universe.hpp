#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "specker/mspace.hpp"

// Finite test universes of multispaces, labeled p1..pn.
namespace specker {

inline std::vector<std::string> point_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

/// Every space with <= max_points points and multiplicities drawn from
/// mults, ordered by size, then lexicographically in the multiplicity vector.
inline std::vector<MultiSpace> all_spaces(std::size_t max_points, const std::vector<std::uint64_t>& mults) {
  std::vector<MultiSpace> out;
  for (std::size_t n = 0; n <= max_points; ++n) {
    if (n > 0 && mults.empty()) break;
    std::vector<std::size_t> pos(n, 0);
    while (true) {
      std::vector<std::uint64_t> u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = mults[pos[i]];
      out.emplace_back(point_labels(n), std::move(u));
      std::size_t k = n;
      while (k > 0 && pos[k - 1] + 1 == mults.size()) pos[--k] = 0;
      if (k == 0) break;
      ++pos[k - 1];
    }
  }
  return out;
}

/// Multiplicities 1..max_mult.
inline std::vector<MultiSpace> all_spaces(std::size_t max_points, std::uint64_t max_mult) {
  std::vector<std::uint64_t> mults;
  for (std::uint64_t m = 1; m <= max_mult; ++m) mults.push_back(m);
  return all_spaces(max_points, mults);
}

inline MultiSpace random_space(std::mt19937_64& rng, std::size_t points, std::uint64_t max_mult) {
  std::uniform_int_distribution<std::uint64_t> d(1, max_mult);
  std::vector<std::uint64_t> u(points);
  for (auto& m : u) m = d(rng);
  return MultiSpace(point_labels(points), std::move(u));
}

}  // namespace specker
