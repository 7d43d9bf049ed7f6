#include "sfvs/rational.hpp"

#include <cctype>
#include <ostream>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator) : value_(numerator) {}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
  mpq_class q(to_mpz(num), d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class common_denominator(std::span<const Rational> values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_class d = v.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace sfvs
