#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specker/checked.hpp"
#include "specker/error.hpp"

namespace specker {

/// A positive integer multiplicity.
class Multiplicity {
 public:
  explicit Multiplicity(std::uint64_t value) : value_(value) {
    if (value == 0) throw structure_error("multiplicity must be positive, got 0");
  }

  std::uint64_t value() const noexcept { return value_; }

  bool divides(Multiplicity other) const noexcept { return other.value_ % value_ == 0; }

  Multiplicity lcm(Multiplicity other) const { return Multiplicity(checked::lcm(value_, other.value_)); }

  friend bool operator==(Multiplicity, Multiplicity) = default;
  friend auto operator<=>(Multiplicity, Multiplicity) = default;

 private:
  std::uint64_t value_;
};

/// A finite boolean multispace: distinct labeled points, each carrying a
/// positive multiplicity. Point order is part of the value and fixes every
/// enumeration order downstream. Copies share the immutable point data.
class MultiSpace {
 public:
  MultiSpace() : data_(empty_data()) {}

  MultiSpace(std::vector<std::string> labels, std::vector<std::uint64_t> mults) {
    if (labels.size() != mults.size()) {
      throw structure_error("label/multiplicity length mismatch: " + std::to_string(labels.size()) +
                            " labels, " + std::to_string(mults.size()) + " multiplicities");
    }
    auto data = std::make_shared<Data>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (mults[i] == 0) throw structure_error("multiplicity of point '" + labels[i] + "' must be positive");
      if (!data->index.emplace(labels[i], i).second) {
        throw structure_error("duplicate point label '" + labels[i] + "'");
      }
    }
    data->labels = std::move(labels);
    data->mults = std::move(mults);
    data_ = std::move(data);
  }

  std::size_t size() const noexcept { return data_->labels.size(); }
  bool empty() const noexcept { return data_->labels.empty(); }

  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  std::uint64_t mult(std::size_t i) const { return data_->mults.at(i); }
  Multiplicity multiplicity(std::size_t i) const { return Multiplicity(mult(i)); }

  std::span<const std::string> labels() const noexcept { return data_->labels; }
  std::span<const std::uint64_t> mults() const noexcept { return data_->mults; }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw structure_error("unknown point label '" + label + "'");
  }

  std::uint64_t max_mult() const noexcept {
    std::uint64_t m = 0;
    for (auto v : data_->mults) m = v > m ? v : m;
    return m;
  }

  /// True when both handles refer to the same shared point data.
  bool same_data(const MultiSpace& other) const noexcept { return data_ == other.data_; }

  friend bool operator==(const MultiSpace& a, const MultiSpace& b) {
    return a.data_ == b.data_ || (a.data_->labels == b.data_->labels && a.data_->mults == b.data_->mults);
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<std::uint64_t> mults;
    std::unordered_map<std::string, std::size_t> index;
  };

  static std::shared_ptr<const Data> empty_data() {
    static const auto empty = std::make_shared<const Data>();
    return empty;
  }

  std::shared_ptr<const Data> data_;
};

inline MultiSpace new_space(std::vector<std::string> labels, std::vector<std::uint64_t> mults) {
  return MultiSpace(std::move(labels), std::move(mults));
}

/// Raised when a point map fails to decrease multiplicity at some point.
class divisibility_error : public domain_error {
 public:
  divisibility_error(std::string point, std::uint64_t dom_mult, std::uint64_t cod_mult)
      : domain_error("divisibility violation at '" + point + "': u_cod = " + std::to_string(cod_mult) +
                     " does not divide u_dom = " + std::to_string(dom_mult)),
        point_(std::move(point)),
        dom_mult_(dom_mult),
        cod_mult_(cod_mult) {}

  const std::string& point() const noexcept { return point_; }
  std::uint64_t dom_mult() const noexcept { return dom_mult_; }
  std::uint64_t cod_mult() const noexcept { return cod_mult_; }

 private:
  std::string point_;
  std::uint64_t dom_mult_;
  std::uint64_t cod_mult_;
};

/// A multiplicity-decreasing map between multispaces. The point map is stored
/// as indices into the codomain; zeta(x) = u_dom(x) / u_cod(gamma(x)).
class BmsMorphism {
 public:
  BmsMorphism(MultiSpace dom, MultiSpace cod, std::vector<std::size_t> gamma)
      : dom_(std::move(dom)), cod_(std::move(cod)), gamma_(std::move(gamma)) {
    if (gamma_.size() != dom_.size()) {
      throw structure_error("point map has " + std::to_string(gamma_.size()) + " entries for a domain of " +
                            std::to_string(dom_.size()) + " points");
    }
    zeta_.reserve(gamma_.size());
    for (std::size_t x = 0; x < gamma_.size(); ++x) {
      if (gamma_[x] >= cod_.size()) {
        throw structure_error("point map sends '" + dom_.label(x) + "' outside the codomain");
      }
      const auto du = dom_.mult(x);
      const auto cu = cod_.mult(gamma_[x]);
      if (du % cu != 0) throw divisibility_error(dom_.label(x), du, cu);
      zeta_.push_back(du / cu);
    }
  }

  static BmsMorphism identity(const MultiSpace& space) {
    std::vector<std::size_t> gamma(space.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = i;
    return BmsMorphism(space, space, std::move(gamma));
  }

  const MultiSpace& dom() const noexcept { return dom_; }
  const MultiSpace& cod() const noexcept { return cod_; }
  std::span<const std::size_t> gamma() const noexcept { return gamma_; }
  std::size_t image(std::size_t x) const { return gamma_.at(x); }
  std::uint64_t zeta(std::size_t x) const { return zeta_.at(x); }
  std::span<const std::uint64_t> zetas() const noexcept { return zeta_; }

  /// gamma rendered as a label map.
  std::map<std::string, std::string> label_map() const {
    std::map<std::string, std::string> out;
    for (std::size_t x = 0; x < gamma_.size(); ++x) out.emplace(dom_.label(x), cod_.label(gamma_[x]));
    return out;
  }

  friend bool operator==(const BmsMorphism& a, const BmsMorphism& b) {
    return a.gamma_ == b.gamma_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  MultiSpace dom_;
  MultiSpace cod_;
  std::vector<std::size_t> gamma_;
  std::vector<std::uint64_t> zeta_;
};

/// Builds a morphism from a label map; the map must be total on dom.
inline BmsMorphism new_morphism(const MultiSpace& dom, const MultiSpace& cod,
                                const std::map<std::string, std::string>& gamma) {
  std::vector<std::size_t> idx(dom.size());
  for (std::size_t x = 0; x < dom.size(); ++x) {
    auto it = gamma.find(dom.label(x));
    if (it == gamma.end()) throw structure_error("point map is undefined at '" + dom.label(x) + "'");
    idx[x] = cod.index_of(it->second);
  }
  for (const auto& [from, to] : gamma) {
    if (!dom.find(from)) throw structure_error("point map mentions unknown domain label '" + from + "'");
  }
  return BmsMorphism(dom, cod, std::move(idx));
}

/// second after first.
inline BmsMorphism compose(const BmsMorphism& first, const BmsMorphism& second) {
  if (!(first.cod() == second.dom())) {
    throw structure_error("cannot compose: codomain of the first morphism differs from domain of the second");
  }
  std::vector<std::size_t> gamma(first.dom().size());
  for (std::size_t x = 0; x < gamma.size(); ++x) gamma[x] = second.image(first.image(x));
  return BmsMorphism(first.dom(), second.cod(), std::move(gamma));
}

inline bool is_isomorphism(const BmsMorphism& m) {
  if (m.dom().size() != m.cod().size()) return false;
  std::vector<bool> hit(m.cod().size(), false);
  for (std::size_t x = 0; x < m.dom().size(); ++x) {
    if (m.zeta(x) != 1 || hit[m.image(x)]) return false;
    hit[m.image(x)] = true;
  }
  return true;
}

/// Inverse of an isomorphism.
inline BmsMorphism inverse(const BmsMorphism& m) {
  if (!is_isomorphism(m)) throw domain_error("morphism is not an isomorphism");
  std::vector<std::size_t> gamma(m.cod().size());
  for (std::size_t x = 0; x < m.dom().size(); ++x) gamma[m.image(x)] = x;
  return BmsMorphism(m.cod(), m.dom(), std::move(gamma));
}

/// Every multiplicity-decreasing map X -> Y, in lexicographic order of the
/// point map (first domain point varies slowest).
inline std::vector<BmsMorphism> enumerate_homs(const MultiSpace& x, const MultiSpace& y) {
  std::vector<std::vector<std::size_t>> targets(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (x.mult(i) % y.mult(j) == 0) targets[i].push_back(j);
    }
    if (targets[i].empty()) return {};
  }
  std::vector<BmsMorphism> out;
  std::vector<std::size_t> pos(x.size(), 0);
  std::vector<std::size_t> gamma(x.size());
  while (true) {
    for (std::size_t i = 0; i < x.size(); ++i) gamma[i] = targets[i][pos[i]];
    out.emplace_back(x, y, gamma);
    std::size_t k = x.size();
    while (k > 0) {
      --k;
      if (++pos[k] < targets[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (x.size() == 0) return out;
  }
}

}  // namespace specker
