#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "segrekit/scalars.hpp"
#include "segrekit/series.hpp"

namespace segre {

/// Sturm chain p, p', -rem(p, p'), ... of a rational polynomial. Each member
/// is scaled by a positive constant, which leaves sign variations unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const PolyD& p);

  const std::vector<PolyD>& chain() const { return chain_; }

  /// Sign variations of the chain evaluated at x.
  int variations_at(const Rational& x) const;
  /// Sign variations at -infinity (negative) or +infinity, read off the
  /// leading coefficients.
  int variations_at_infinity(bool negative) const;

 private:
  std::vector<PolyD> chain_;
};

/// Number of distinct real roots of p in (lo, hi]; an empty bound means the
/// corresponding infinity. p must be squarefree and nonzero, lo < hi.
int sturm_count(const PolyD& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

struct RealRootReport {
  int degree = 0;
  int real_roots_with_multiplicity = 0;
  int positive_roots_with_multiplicity = 0;  // roots in (0, inf)
  bool is_real_rooted = false;
  bool all_real_roots_nonpositive = false;
};

/// Exact real-rootedness test: strips t^k, squarefree-decomposes the rest and
/// counts real roots per factor with Sturm chains. Throws on the zero
/// polynomial.
RealRootReport is_real_rooted(const PolyD& p);

/// r-fold Segre product of s with itself.
RationalSeries segre_power(const RationalSeries& s, long r);

struct TraceRecord {
  long r = 0;
  HVector h;
  RealRootReport report;
  std::size_t max_bits = 0;
};

struct ConjectureTrace {
  RationalSeries input{HVector{}, 1};
  long r_max = 0;
  std::vector<TraceRecord> records;
  std::optional<long> min_r;
  // Real-rooted at some r and not real-rooted at a later r.
  bool non_monotone = false;
};

inline constexpr std::size_t kDefaultMaxBits = 1'000'000;

struct ExploreOptions {
  bool early_stop = false;
  std::size_t max_bits = kDefaultMaxBits;
  // Called after every r with the fresh record.
  std::function<void(const TraceRecord&)> on_record;
};

/// Builds s^{*r} for r = 1 .. r_max incrementally and records the
/// real-rootedness verdict of each h-polynomial. Requires a nonnegative,
/// nonzero h. Throws BudgetExceeded when an entry outgrows max_bits.
ConjectureTrace find_min_r(const RationalSeries& s, long r_max, const ExploreOptions& options = {});

}  // namespace segre
