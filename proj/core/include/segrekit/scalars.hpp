#pragma once

#include <concepts>
#include <string>

#include "segrekit/polynomial.hpp"
#include "segrekit/rational.hpp"

namespace segre {

/// Polynomials in the indeterminate d over the rationals. Also used for
/// plain univariate rational polynomials (h-polynomials in t, characteristic
/// polynomials in x); the printed variable name is chosen by the caller.
using PolyD = Polynomial<Rational>;

/// An element of Q(d): num/den with gcd(num, den) = 1 and den monic.
/// Canonicalized on construction, so operator== is structural.
class FracD {
 public:
  FracD() : den_(Rational(1)) {}

  template <std::integral I>
  FracD(I value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT
  FracD(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT
  FracD(const PolyD& num) : num_(num), den_(Rational(1)) {}  // NOLINT

  // Throws DomainError when den is the zero polynomial.
  FracD(PolyD num, PolyD den);

  const PolyD& num() const { return num_; }
  const PolyD& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// gcd(num, den) = 1, den monic, zero stored as 0/1.
  bool is_canonical() const;

  FracD operator-() const;
  FracD& operator+=(const FracD& rhs);
  FracD& operator-=(const FracD& rhs);
  FracD& operator*=(const FracD& rhs);
  FracD& operator/=(const FracD& rhs);

  friend FracD operator+(FracD lhs, const FracD& rhs) { return lhs += rhs; }
  friend FracD operator-(FracD lhs, const FracD& rhs) { return lhs -= rhs; }
  friend FracD operator*(FracD lhs, const FracD& rhs) { return lhs *= rhs; }
  friend FracD operator/(FracD lhs, const FracD& rhs) { return lhs /= rhs; }

  friend bool operator==(const FracD& lhs, const FracD& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

  FracD inverse() const;

 private:
  void canonicalize();

  PolyD num_;
  PolyD den_;
};

/// Polynomials in t with coefficients in Q(d): the ring Q(d)[t] that holds
/// every symbolic matrix entry and eigenvector component.
using PolyT = Polynomial<FracD>;

/// The indeterminate d as an element of Q[d].
PolyD d_poly();
/// The indeterminate d as a constant of Q(d)[t].
PolyT d_symbol();
/// The indeterminate t of Q(d)[t].
PolyT t_symbol();

Rational evaluate(const FracD& f, const Rational& d_value);
Rational evaluate(const PolyT& q, const Rational& d_value, const Rational& t_value);

/// Evaluates the d-coefficients only, leaving a rational polynomial in t.
PolyD evaluate_d(const PolyT& q, const Rational& d_value);

/// Every FracD coefficient is canonical.
bool is_canonical(const PolyT& q);

std::size_t max_bit_size(const PolyD& p);

}  // namespace segre
