#include "supero/rational.hpp"

#include <ostream>

#include "supero/error.hpp"

namespace supero {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DimensionError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw FormatError("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw FormatError("zero denominator: '" + text + "'");
  return Rational(std::move(q));
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
    throw FormatError("bad rational pair (" + num + ", " + den + ")");
  }
  if (d <= 0) throw FormatError("denominator must be positive: " + den);
  mpq_class q(n, d);
  q.canonicalize();
  if (q.get_den() != d) throw FormatError("rational pair not reduced: (" + num + ", " + den + ")");
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DimensionError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace supero

std::size_t std::hash<supero::Rational>::operator()(const supero::Rational& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.num().get_mpz_t()) ^ (r.sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  const std::size_t h2 = mpz_get_ui(r.den().get_mpz_t());
  return h1 * 1000003U ^ h2;
}
