#include "segrekit/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "segrekit/error.hpp"
#include "segrekit/matrices.hpp"

namespace segre {

RationalSeries::RationalSeries(HVector h, long d) : h_(std::move(h)), d_(d) {
  if (d_ < 1) throw DomainError("denominator exponent d must be >= 1, got " + std::to_string(d_));
  if (static_cast<long>(h_.size()) > d_) {
    throw DomainError("h-vector has " + std::to_string(h_.size()) +
                      " entries but d = " + std::to_string(d_) + " allows at most d");
  }
}

Rational RationalSeries::h_at(long i) const {
  if (i < 0 || i >= static_cast<long>(h_.size())) return Rational(0);
  return h_[static_cast<std::size_t>(i)];
}

bool RationalSeries::is_zero() const {
  return std::all_of(h_.begin(), h_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<long> RationalSeries::last_nonzero() const {
  for (std::size_t k = h_.size(); k-- > 0;) {
    if (!h_[k].is_zero()) return static_cast<long>(k);
  }
  return std::nullopt;
}

PolyD RationalSeries::h_polynomial() const { return PolyD(h_); }

Rational coeff_at(const RationalSeries& s, long n) {
  Rational sum;
  if (n < 0) return sum;
  const long top = std::min<long>(n, static_cast<long>(s.h().size()) - 1);
  for (long j = 0; j <= top; ++j) {
    const Rational& hj = s.h()[static_cast<std::size_t>(j)];
    if (hj.is_zero()) continue;
    sum += binomial(n - j + s.d() - 1, n - j) * hj;
  }
  return sum;
}

std::vector<Rational> expand(const RationalSeries& s, long count) {
  std::vector<Rational> out;
  for (long n = 0; n < count; ++n) out.push_back(coeff_at(s, n));
  return out;
}

HVector h_from_sequence(const std::vector<Rational>& a, long d) {
  if (d < 1) throw DomainError("denominator exponent d must be >= 1");
  if (static_cast<long>(a.size()) < d) {
    throw DomainError("need at least d = " + std::to_string(d) + " sequence terms, got " +
                      std::to_string(a.size()));
  }
  HVector h(static_cast<std::size_t>(d));
  for (long n = 0; n < d; ++n) {
    Rational sum;
    for (long j = 0; j <= n; ++j) {
      const Rational& aj = a[static_cast<std::size_t>(j)];
      if (aj.is_zero()) continue;
      sum += binomial(n - j - d - 1, n - j) * aj;
    }
    h[static_cast<std::size_t>(n)] = sum;
  }
  return h;
}

std::vector<Rational> rev_slice(const HVector& h, long n, long d) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max<long>(d, 0)));
  for (long k = 0; k < d; ++k) {
    const long idx = n - k;
    out.push_back(idx >= 0 && idx < static_cast<long>(h.size()) ? h[static_cast<std::size_t>(idx)]
                                                               : Rational(0));
  }
  return out;
}

RationalSeries segre_direct(const RationalSeries& a, const RationalSeries& b) {
  const long d = a.d() + b.d() - 1;
  std::vector<Rational> seq;
  seq.reserve(static_cast<std::size_t>(d));
  for (long n = 0; n < d; ++n) seq.push_back(coeff_at(a, n) * coeff_at(b, n));
  return RationalSeries(h_from_sequence(seq, d), d);
}

RationalSeries segre_closed_form(const RationalSeries& a, const RationalSeries& b) {
  const long da = a.d();
  const long db = b.d();
  const long d = da + db - 1;
  HVector h(static_cast<std::size_t>(d));
  for (long n = 0; n < d; ++n) {
    Rational sum;
    for (long i = 0; i < db; ++i) {
      const Rational ha = a.h_at(n - i);
      if (ha.is_zero()) continue;
      for (long j = 0; j < da; ++j) {
        const Rational hb = b.h_at(n - j);
        if (hb.is_zero()) continue;
        sum += ha * hb * binomial(da + i - j - 1, i) * binomial(db + j - i - 1, j);
      }
    }
    h[static_cast<std::size_t>(n)] = sum;
  }
  return RationalSeries(std::move(h), d);
}

namespace {

Rational bilinear(const std::vector<Rational>& left, const Matrix<Rational>& m,
                  const std::vector<Rational>& right) {
  Rational sum;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (left[i].is_zero()) continue;
    Rational row_sum;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (right[j].is_zero()) continue;
      row_sum += m(i, j) * right[j];
    }
    sum += left[i] * row_sum;
  }
  return sum;
}

}  // namespace

Rational segre_block_entry(const RationalSeries& a, const RationalSeries& b, long n) {
  if (a.d() > b.d()) return segre_block_entry(b, a, n);
  const long da = a.d();
  const long db = b.d();
  if (n < 0) return Rational(0);
  const auto right = rev_slice(b.h(), n, da);
  if (n <= da - 1) {
    return bilinear(rev_slice(a.h(), n, da), msub(da, db, 0), right);
  }
  if (n <= db - 1) {
    return bilinear(rev_slice(a.h(), da - 1, da), msub(da, db, n - da + 1), right);
  }
  return bilinear(rev_slice(a.h(), n - db + da, da), msub(da, db, db - da), right);
}

RationalSeries segre_blockwise(const RationalSeries& a, const RationalSeries& b) {
  const long d = a.d() + b.d() - 1;
  HVector h;
  h.reserve(static_cast<std::size_t>(d));
  for (long n = 0; n < d; ++n) h.push_back(segre_block_entry(a, b, n));
  return RationalSeries(std::move(h), d);
}

RationalSeries reduce(const RationalSeries& s) {
  PolyD h = s.h_polynomial();
  long d = s.d();
  const PolyD one_minus_t(std::vector<Rational>{Rational(1), Rational(-1)});
  while (d > 1 && !h.is_zero() && evaluate(h, Rational(1)).is_zero()) {
    h = exact_divide(h, one_minus_t);
    --d;
  }
  if (d == s.d()) return s;
  HVector out = h.coefficients();
  return RationalSeries(std::move(out), d);
}

bool is_nonnegative(const HVector& h) {
  return std::all_of(h.begin(), h.end(), [](const Rational& x) { return x.sign() >= 0; });
}

std::optional<bool> is_palindromic(const HVector& h) {
  long m = -1;
  for (std::size_t k = h.size(); k-- > 0;) {
    if (!h[k].is_zero()) {
      m = static_cast<long>(k);
      break;
    }
  }
  if (m < 0) return std::nullopt;
  for (long i = 0; i <= m; ++i) {
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(m - i)]) return false;
  }
  return true;
}

PreservationReport check_preservation(const RationalSeries& a, const RationalSeries& b) {
  PreservationReport r;
  r.product = segre_direct(a, b);
  r.nonneg_in[0] = is_nonnegative(a.h());
  r.nonneg_in[1] = is_nonnegative(b.h());
  r.nonneg_out = is_nonnegative(r.product.h());
  r.symmetric_in[0] = is_palindromic(a.h());
  r.symmetric_in[1] = is_palindromic(b.h());
  r.symmetric_out = is_palindromic(r.product.h());
  const auto ma = a.last_nonzero();
  const auto mb = b.last_nonzero();
  r.symmetric_applicable = ma && mb && (a.d() - *ma == b.d() - *mb);
  return r;
}

}  // namespace segre
