#include "segrekit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

#include "segrekit/error.hpp"

namespace segre {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view token) {
  const auto slash = token.find('/');
  const std::string_view num_part = token.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
  if (!is_integer_literal(num_part) || !is_integer_literal(den_part) ||
      den_part.front() == '-' || den_part.front() == '+') {
    throw DomainError("malformed rational '" + std::string(token) + "'");
  }
  std::string num_str(num_part);
  if (num_str.front() == '+') num_str.erase(0, 1);
  const mpz_class num(num_str, 10);
  const mpz_class den(std::string(den_part), 10);
  if (den == 0) throw DomainError("zero denominator in rational '" + std::string(token) + "'");
  return Rational(num, den);
}

std::size_t Rational::bit_size() const {
  return std::max(mpz_sizeinbase(value_.get_num_mpz_t(), 2),
                  mpz_sizeinbase(value_.get_den_mpz_t(), 2));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  // mpz_bin_ui follows the same extended convention for negative n.
  mpz_class top(n);
  mpz_class result;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(result);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace segre
