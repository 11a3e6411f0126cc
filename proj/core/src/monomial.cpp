#include "supero/monomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "supero/error.hpp"

namespace supero {

namespace {
constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 31;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 4;
}

SuperMonomialBasis::SuperMonomialBasis(std::vector<Parity> base, std::size_t degree, Kind kind)
    : base_(std::move(base)), degree_(degree), kind_(kind), pos_(base_.size()) {
  std::vector<std::uint32_t> evens, odds;
  for (std::uint32_t i = 0; i < base_.size(); ++i) {
    if (odd_class(i)) {
      pos_[i] = static_cast<std::uint32_t>(odds.size());
      odds.push_back(i);
    } else {
      pos_[i] = static_cast<std::uint32_t>(evens.size());
      evens.push_back(i);
    }
  }
  even_count_ = evens.size();
  odd_count_ = odds.size();

  binom_n_ = base_.size() + degree_ + 1;
  binom_.assign(binom_n_ * binom_n_, 0);
  for (std::size_t n = 0; n < binom_n_; ++n) {
    binom_[n * binom_n_] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::uint64_t a = binom_[(n - 1) * binom_n_ + k - 1], b = binom_[(n - 1) * binom_n_ + k];
      // saturate; entries that large are never needed by a basis that fits in memory
      binom_[n * binom_n_ + k] = a > kSaturated - b ? kSaturated : a + b;
    }
  }

  const std::size_t kmax = std::min(even_count_, degree_);
  offset_.assign(kmax + 2, 0);
  for (std::size_t k = 0; k <= kmax; ++k) {
    const std::uint64_t e = binom(even_count_, k), o = multiset_count(odd_count_, degree_ - k);
    if (e >= kSaturated || o >= kSaturated || (o != 0 && e > kMaxEntries / o)) {
      throw DimensionError("monomial basis too large");
    }
    const std::uint64_t block = e * o;
    offset_[k + 1] = offset_[k] + block;
  }
  const std::uint64_t total = offset_[kmax + 1];
  if (total * std::max<std::size_t>(degree_, 1) > kMaxEntries) {
    throw DimensionError("monomial basis too large (" + std::to_string(total) + " monomials)");
  }
  data_.resize(total * degree_);
  parities_.assign(total, Parity::even);

  std::vector<std::uint32_t> cur(degree_);
  std::function<void(std::size_t, std::size_t, std::uint32_t)> rec;
  // slot: next tuple position; k: number of evens wanted; from: smallest allowed class position
  rec = [&](std::size_t slot, std::size_t k, std::uint32_t from) {
    if (slot == degree_) {
      const std::size_t idx = index_of(cur);
      std::copy(cur.begin(), cur.end(), data_.begin() + static_cast<std::ptrdiff_t>(idx * degree_));
      unsigned par = 0;
      for (auto v : cur) par ^= bit(base_[v]);
      parities_[idx] = parity_of_bit(par);
      return;
    }
    if (slot < k) {
      for (std::uint32_t e = from; e < even_count_; ++e) {
        cur[slot] = evens[e];
        rec(slot + 1, k, slot + 1 == k ? 0 : e + 1);
      }
    } else {
      for (std::uint32_t o = from; o < odd_count_; ++o) {
        cur[slot] = odds[o];
        rec(slot + 1, k, o);
      }
    }
  };
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (offset_[k + 1] == offset_[k]) continue;
    if (degree_ == 0) {
      parities_[0] = Parity::even;
      continue;
    }
    rec(0, k, 0);
  }
}

std::uint64_t SuperMonomialBasis::binom(std::size_t n, std::size_t k) const {
  if (k > n) return 0;
  return binom_[n * binom_n_ + k];
}

std::uint64_t SuperMonomialBasis::multiset_count(std::size_t classes, std::size_t m) const {
  if (m == 0) return 1;
  if (classes == 0) return 0;
  return binom(classes + m - 1, m);
}

std::size_t SuperMonomialBasis::index_of(std::span<const std::uint32_t> t) const {
  std::size_t k = 0;
  while (k < t.size() && !odd_class(t[k])) ++k;
  std::uint64_t rank_e = 0, rank_o = 0;
  for (std::size_t i = 0; i < k; ++i) rank_e += binom(pos_[t[i]], i + 1);
  for (std::size_t i = k; i < t.size(); ++i) rank_o += binom(pos_[t[i]] + (i - k), i - k + 1);
  return static_cast<std::size_t>(offset_[k] + rank_e * multiset_count(odd_count_, degree_ - k) + rank_o);
}

std::optional<SuperMonomialBasis::Normalized> SuperMonomialBasis::normalize(std::span<std::uint32_t> t) const {
  int sign = 1;
  auto key = [&](std::uint32_t i) { return (odd_class(i) ? (std::uint64_t{1} << 32) : 0) | pos_[i]; };
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && key(t[j - 1]) > key(t[j]); --j) {
      if (kind_ == Kind::exterior && !(base_[t[j - 1]] == Parity::odd && base_[t[j]] == Parity::odd)) sign = -sign;
      std::swap(t[j - 1], t[j]);
    }
  }
  if (kind_ == Kind::exterior) {
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i] == t[i - 1] && base_[t[i]] == Parity::even) return std::nullopt;
    }
  }
  return Normalized{sign, index_of(t)};
}

std::uint64_t super_exterior_dimension(std::size_t a, std::size_t b, std::size_t p) {
  auto c = [](std::uint64_t n, std::uint64_t k) -> std::uint64_t {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= std::min(a, p); ++k) {
    const std::size_t m = p - k;
    const std::uint64_t odd = m == 0 ? 1 : (b == 0 ? 0 : c(b + m - 1, m));
    total += c(a, k) * odd;
  }
  return total;
}

}  // namespace supero
