#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace segre {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator (zero is 0/1). Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  // Throws DomainError when den == 0.
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p" or "-p/q". Throws DomainError naming the token.
  static Rational parse(std::string_view token);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Larger of the bit lengths of numerator and denominator.
  std::size_t bit_size() const;

  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& x);
Rational pow(const Rational& base, unsigned exponent);

/// C(n, k) for integer n (any sign) under the extended definition:
/// n(n-1)...(n-k+1)/k! for k >= 0 and 0 for k < 0.
Rational binomial(long n, long k);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace segre
