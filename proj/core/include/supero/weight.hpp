#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supero/rational.hpp"

namespace supero {

/// Coordinates in the basis dual to a chosen list of torus elements.
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  std::string str() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a);
  friend Weight operator*(const Rational& c, const Weight& w);
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  /// Lexicographic.
  friend bool operator<(const Weight& a, const Weight& b);
};

/// A linear functional on weights, given by its values on the coordinate basis.
struct Functional {
  std::vector<Rational> values;

  Rational operator()(const Weight& w) const;
};

}  // namespace supero
