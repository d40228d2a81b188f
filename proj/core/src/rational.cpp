#include "lycoact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace lyc {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad fraction '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
    return Rational(std::move(v));
  }
  // decimal: digits '.' digits
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0 || digits.empty()) throw std::invalid_argument("Rational::parse: bad decimal '" + s + "'");
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("Rational::parse: bad decimal '" + s + "'");
  mpz_class den = 1;
  for (size_t k = 0; k < frac_len; ++k) den *= 10;
  mpq_class v(num, den);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::string Rational::numerator() const { return v_.get_num().get_str(); }
std::string Rational::denominator() const { return v_.get_den().get_str(); }

bool Rational::is_integer() const { return v_.get_den() == 1; }

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational::to_long: not an integer");
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational::to_long: overflow");
  return v_.get_num().get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace lyc
