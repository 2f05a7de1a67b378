#include "segrekit/scalars.hpp"

#include <algorithm>
#include <utility>

#include "segrekit/error.hpp"
#include "segrekit/format.hpp"

namespace segre {

FracD::FracD(PolyD num, PolyD den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void FracD::canonicalize() {
  if (num_.is_zero()) {
    den_ = PolyD(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    PolyD g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = Rational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool FracD::is_canonical() const {
  if (den_.is_zero() || !den_.leading().is_one()) return false;
  if (num_.is_zero()) return den_ == PolyD(Rational(1));
  return gcd(num_, den_).degree() == 0;
}

FracD FracD::operator-() const {
  FracD out = *this;
  out.num_ = -out.num_;
  return out;
}

FracD& FracD::operator+=(const FracD& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (den_.degree() > 0) canonicalize();
    else if (num_.is_zero()) den_ = PolyD(Rational(1));
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

FracD& FracD::operator-=(const FracD& rhs) { return *this += -rhs; }

FracD& FracD::operator*=(const FracD& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    *this = FracD();
    return *this;
  }
  if (is_polynomial() && rhs.is_polynomial()) {
    // Both denominators are 1 after canonicalization.
    num_ = num_ * rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

FracD FracD::inverse() const {
  if (is_zero()) throw DomainError("division by the zero rational function");
  return FracD(den_, num_);
}

FracD& FracD::operator/=(const FracD& rhs) { return *this *= rhs.inverse(); }

PolyD d_poly() { return PolyD::variable(); }

PolyT d_symbol() { return PolyT(FracD(d_poly())); }

PolyT t_symbol() { return PolyT::variable(); }

Rational evaluate(const FracD& f, const Rational& d_value) {
  const Rational den = evaluate(f.den(), d_value);
  if (den.is_zero()) {
    throw DomainError("pole at d = " + d_value.str() + ": denominator " +
                      to_string(f.den(), "d") + " vanishes");
  }
  return evaluate(f.num(), d_value) / den;
}

PolyD evaluate_d(const PolyT& q, const Rational& d_value) {
  std::vector<Rational> coeffs;
  coeffs.reserve(q.coefficients().size());
  for (const auto& c : q.coefficients()) coeffs.push_back(evaluate(c, d_value));
  return PolyD(std::move(coeffs));
}

Rational evaluate(const PolyT& q, const Rational& d_value, const Rational& t_value) {
  return evaluate(evaluate_d(q, d_value), t_value);
}

bool is_canonical(const PolyT& q) {
  return std::all_of(q.coefficients().begin(), q.coefficients().end(),
                     [](const FracD& c) { return c.is_canonical() && !c.is_zero(); });
}

std::size_t max_bit_size(const PolyD& p) {
  std::size_t bits = 0;
  for (const auto& c : p.coefficients()) bits = std::max(bits, c.bit_size());
  return bits;
}

}  // namespace segre
