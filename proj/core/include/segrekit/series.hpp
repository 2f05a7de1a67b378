#pragma once

#include <optional>
#include <vector>

#include "segrekit/rational.hpp"
#include "segrekit/scalars.hpp"

namespace segre {

using HVector = std::vector<Rational>;

/// The generating series sum a_n t^n = h(t) / (1 - t)^d.
///
/// d >= 1 and h has at most d entries. Entries beyond the stored length are
/// read as zero; trailing zeros are kept as given, so the stored length is
/// what gets printed. The all-zero h is the zero series.
class RationalSeries {
 public:
  // Throws DomainError when d < 1 or h.size() > d.
  RationalSeries(HVector h, long d);

  const HVector& h() const { return h_; }
  long d() const { return d_; }

  /// h_i, zero outside [0, h.size()).
  Rational h_at(long i) const;

  bool is_zero() const;

  /// Index of the last nonzero entry of h; nullopt for the zero series.
  std::optional<long> last_nonzero() const;

  /// The h-polynomial as a rational polynomial in t.
  PolyD h_polynomial() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  HVector h_;
  long d_;
};

/// a_n = sum_j C(n-j+d-1, n-j) h_j; zero for n < 0.
Rational coeff_at(const RationalSeries& s, long n);

/// a_0 .. a_{count-1}.
std::vector<Rational> expand(const RationalSeries& s, long count);

/// (Delta^d a)_n for n = 0 .. d-1, with a_n = 0 for n < 0. Needs at least d
/// terms of the sequence.
HVector h_from_sequence(const std::vector<Rational>& a, long d);

/// (h_n, h_{n-1}, ..., h_{n-d+1}) with out-of-range indices read as zero.
std::vector<Rational> rev_slice(const HVector& h, long n, long d);

/// Segre (Hadamard) product by multiplying coefficient sequences termwise
/// and differencing back. Result exponent d1 + d2 - 1, h length d1 + d2 - 1.
RationalSeries segre_direct(const RationalSeries& a, const RationalSeries& b);

/// Same product through the finite double sum with weights
/// C(d1+i-j-1, i) * C(d2+j-i-1, j).
RationalSeries segre_closed_form(const RationalSeries& a, const RationalSeries& b);

/// Same product computed per entry as rev^T * M * rev using the square
/// transformation blocks M_{da}(db, t).
RationalSeries segre_blockwise(const RationalSeries& a, const RationalSeries& b);

/// One entry of the block formula, valid for any n >= 0 (including indices
/// past the numerator degree, where it evaluates to zero).
Rational segre_block_entry(const RationalSeries& a, const RationalSeries& b, long n);

/// Strips common (1 - t) factors from numerator and denominator while d > 1.
/// Never applied implicitly.
RationalSeries reduce(const RationalSeries& s);

struct PreservationReport {
  bool nonneg_in[2] = {false, false};
  bool nonneg_out = false;
  // d_a - m_a == d_b - m_b, with m the index of the last nonzero h entry.
  bool symmetric_applicable = false;
  // nullopt when the corresponding series is zero.
  std::optional<bool> symmetric_in[2];
  std::optional<bool> symmetric_out;
  RationalSeries product{HVector{}, 1};
};

PreservationReport check_preservation(const RationalSeries& a, const RationalSeries& b);

bool is_nonnegative(const HVector& h);

/// h_i == h_{m-i} for the last nonzero index m; nullopt for the zero vector.
std::optional<bool> is_palindromic(const HVector& h);

}  // namespace segre
