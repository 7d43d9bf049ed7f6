#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sfvs {

/// Exact rational number, always normalized with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long numerator);  // NOLINT: implicit integer promotion is intended
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "a/b" or "a" with optional sign on the numerator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_positive() const noexcept { return sgn(value_) > 0; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }

  /// Always "num/den", e.g. "2/1".
  std::string str() const;

  Rational& operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
  }
  Rational& operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

/// Least common multiple of the denominators.
mpz_class common_denominator(std::span<const Rational> values);

}  // namespace sfvs
