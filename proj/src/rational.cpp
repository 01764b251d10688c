#include "orbiklt/rational.hpp"

#include <ostream>

#include "orbiklt/errors.hpp"

namespace orbiklt {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through text.
  return mpz_class(std::to_string(v));
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  }
  const mpz_class d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(mpz_class(std::string(num)), d));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace orbiklt
