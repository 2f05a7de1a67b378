#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "segrekit/error.hpp"

namespace segre {

/// Dense univariate polynomial over a coefficient field R. Coefficient i
/// multiplies x^i. The representation is canonical: no trailing zero
/// coefficients, so the zero polynomial has an empty coefficient list and
/// equality is structural.
///
/// R must provide a default (zero) constructor, construction from int,
/// is_zero(), ring operators and, for division-based algorithms, operator/.
template <class R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;

  Polynomial(const R& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.push_back(constant);
  }

  // Embeds anything the coefficient field can be built from (integers,
  // rationals, or a smaller ring in the scalar tower) as a constant.
  template <class U>
    requires(std::constructible_from<R, const U&> &&
             !std::same_as<std::remove_cvref_t<U>, R> &&
             !std::same_as<std::remove_cvref_t<U>, Polynomial>)
  Polynomial(const U& constant)  // NOLINT(google-explicit-constructor)
      : Polynomial(R(constant)) {}

  explicit Polynomial(std::vector<R> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }

  static Polynomial monomial(const R& c, std::size_t power) {
    if (c.is_zero()) return {};
    std::vector<R> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
  }

  /// The indeterminate itself.
  static Polynomial variable() { return monomial(R(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  const R& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<R> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial scaled(const R& c) const {
    if (c.is_zero()) return {};
    Polynomial out = *this;
    for (auto& x : out.coeffs_) x = x * c;
    out.trim();
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
struct DivMod {
  Polynomial<R> quotient;
  Polynomial<R> remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class R>
DivMod<R> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<R>(), a};
  std::vector<R> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<R> quot(rem.size() - db);
  const R& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const R& top = rem[k + db];
    if (top.is_zero()) continue;
    R factor = top / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= factor * b.coefficients()[j];
    quot[k] = std::move(factor);
  }
  rem.resize(db);
  return {Polynomial<R>(std::move(quot)), Polynomial<R>(std::move(rem))};
}

/// Quotient of an exact division; throws if b does not divide a.
template <class R>
Polynomial<R> exact_divide(const Polynomial<R>& a, const Polynomial<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("exact_divide: nonzero remainder");
  return q;
}

template <class R>
Polynomial<R> monic(const Polynomial<R>& p) {
  if (p.is_zero()) return p;
  return p.scaled(R(1) / p.leading());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
  while (!b.is_zero()) {
    Polynomial<R> r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class R>
Polynomial<R> derivative(const Polynomial<R>& p) {
  if (p.degree() < 1) return {};
  std::vector<R> out(p.coefficients().size() - 1);
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
    out[i - 1] = p.coefficients()[i] * R(static_cast<long>(i));
  }
  return Polynomial<R>(std::move(out));
}

template <class R>
R evaluate(const Polynomial<R>& p, const R& x) {
  R acc;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

template <class R>
Polynomial<R> pow(const Polynomial<R>& base, unsigned exponent) {
  Polynomial<R> result(R(1));
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace segre
