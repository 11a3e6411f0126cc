#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "supero/superalgebra.hpp"

namespace supero {

/// Degree-p monomials over a parity-graded base space.
///
/// Exterior kind (super exterior power): a monomial lists its even indices
/// strictly ascending, then its odd indices weakly ascending. Swapping
/// adjacent factors u, v costs -(-1)^{|u||v|}, so a repeated even factor
/// vanishes. Symmetric kind: ordinary multisets, every swap costs +1.
///
/// Monomials are ranked combinatorially, so lookup needs no hash table.
class SuperMonomialBasis {
 public:
  enum class Kind { exterior, symmetric };

  struct Normalized {
    int sign;
    std::size_t index;
  };

  SuperMonomialBasis(std::vector<Parity> base, std::size_t degree, Kind kind = Kind::exterior);

  std::size_t size() const { return parities_.size(); }
  std::size_t degree() const { return degree_; }
  Kind kind() const { return kind_; }
  const std::vector<Parity>& base() const { return base_; }
  std::span<const std::uint32_t> monomial(std::size_t a) const {
    return {data_.data() + a * degree_, degree_};
  }
  /// Sum of the factor parities.
  Parity parity(std::size_t a) const { return parities_[a]; }

  /// Sorts `tuple` into normal form in place; nullopt when the monomial vanishes.
  std::optional<Normalized> normalize(std::span<std::uint32_t> tuple) const;
  /// Index of a tuple already in normal form.
  std::size_t index_of(std::span<const std::uint32_t> sorted) const;

 private:
  bool odd_class(std::uint32_t i) const { return kind_ == Kind::symmetric || base_[i] == Parity::odd; }
  std::uint64_t binom(std::size_t n, std::size_t k) const;
  std::uint64_t multiset_count(std::size_t classes, std::size_t m) const;

  std::vector<Parity> base_;
  std::size_t degree_;
  Kind kind_;
  std::vector<std::uint32_t> pos_;  // position within the even or odd class
  std::size_t even_count_ = 0, odd_count_ = 0;
  std::vector<std::uint64_t> offset_;  // by number of even factors
  std::vector<std::uint64_t> binom_;
  std::size_t binom_n_ = 0;
  std::vector<std::uint32_t> data_;
  std::vector<Parity> parities_;
};

/// sum_k C(a, k) C(b + p - k - 1, p - k): dimension of the degree-p super exterior
/// power of a space with a even and b odd basis vectors.
std::uint64_t super_exterior_dimension(std::size_t a, std::size_t b, std::size_t p);

}  // namespace supero
