#include "derivscope/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace derivscope {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

namespace {

// [+-]? digit+  — returns false on anything else, including empty input.
bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// mpz_class rejects a leading '+', so shed it first.
mpz_class parse_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  if (!is_signed_integer(num_part))
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  mpz_class num = parse_mpz(num_part);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    const std::string_view den_part = text.substr(slash + 1);
    if (!is_signed_integer(den_part))
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    den = parse_mpz(den_part);
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  }
  mpq_class v(num, den);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace derivscope
