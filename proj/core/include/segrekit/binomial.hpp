#pragma once

#include "segrekit/rational.hpp"

namespace segre {

/// Extended binomial coefficient over any ring of the scalar tower
/// (Rational, PolyD, FracD, PolyT): x(x-1)...(x-k+1)/k! for k >= 0 and
/// zero for k < 0.
template <class R>
R binomial_extended(const R& x, long k) {
  if (k < 0) return R();
  R acc(1);
  for (long i = 0; i < k; ++i) {
    acc = acc * (x - R(i));
    acc = acc * R(Rational(1, i + 1));
  }
  return acc;
}

inline long sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace segre
