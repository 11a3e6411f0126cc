#include "supero/weight.hpp"

#include "supero/error.hpp"

namespace supero {

namespace {
void same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw DimensionError("weights of different rank");
}
}  // namespace

bool Weight::is_zero() const {
  for (const auto& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += coords[i].str();
  }
  return s + ")";
}

Weight& Weight::operator+=(const Weight& o) {
  same_rank(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  same_rank(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator-(const Weight& a) {
  Weight w = a;
  for (auto& c : w.coords) c = -c;
  return w;
}

Weight operator*(const Rational& c, const Weight& w) {
  Weight out = w;
  for (auto& x : out.coords) x *= c;
  return out;
}

bool operator<(const Weight& a, const Weight& b) {
  same_rank(a, b);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
  }
  return false;
}

Rational Functional::operator()(const Weight& w) const {
  if (w.rank() != values.size()) throw DimensionError("functional and weight have different rank");
  Rational s;
  for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * w.coords[i];
  return s;
}

}  // namespace supero
