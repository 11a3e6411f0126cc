#pragma once

// Hand-rolled random generators for the property tests. Seeds are fixed per
// test so failures reproduce.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "supero/families.hpp"
#include "supero/sparse.hpp"

namespace gen {

struct Family {
  std::string name;
  std::vector<int> params;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  supero::Rational rational(int range = 5) {
    const int num = integer(-range, range);
    const int den = integer(1, range);
    return supero::Rational(num, den);
  }

  supero::SparseMatrix matrix(std::size_t rows, std::size_t cols, double density = 0.3) {
    std::vector<supero::Triplet> ts;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (coin(density)) ts.push_back({i, j, rational()});
    return supero::SparseMatrix::from_triplets(rows, cols, std::move(ts));
  }

  /// Low rank on purpose: product of two thin random factors plus noise rows.
  supero::SparseMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t r) {
    return matrix(rows, r, 0.6) * matrix(r, cols, 0.6);
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  const Family& family(const std::vector<Family>& pool) { return pool[index(pool.size())]; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Small algebras with a matrix realization, cheap enough for repeated use.
inline const std::vector<Family>& small_families() {
  static const std::vector<Family> pool{{"gl", {1, 1}}, {"gl", {2, 1}}, {"gl", {1, 2}}, {"sl", {2, 1}},
                                        {"q", {2}},     {"pt", {2}},    {"osp", {1, 2}}, {"osp", {2, 2}},
                                        {"gl", {2, 0}}, {"sl", {2, 0}}};
  return pool;
}

inline supero::AlgebraPtr build(const Family& f) { return supero::build_family(f.name, f.params); }

}  // namespace gen
