#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's series, matrices, spectra or conjecture code.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "segrekit/matrix.hpp"
#include "segrekit/rational.hpp"
#include "segrekit/scalars.hpp"

namespace oracle {

using segre::Rational;

// C(n, k) for n, k >= 0 via the multiplicative formula; 0 when k > n.
inline Rational small_binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational acc(1);
  for (long i = 0; i < k; ++i) acc = acc * Rational(n - i) / Rational(i + 1);
  return acc;
}

// First `count` coefficients of h(t) * (1 - t)^{-d} by direct convolution
// with the series sum_k C(k+d-1, d-1) t^k.
inline std::vector<Rational> convolve_series(const std::vector<Rational>& h, long d, long count) {
  std::vector<Rational> out(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) {
    for (long j = 0; j < static_cast<long>(h.size()) && j <= n; ++j) {
      out[static_cast<std::size_t>(n)] += h[static_cast<std::size_t>(j)] * small_binomial(n - j + d - 1, d - 1);
    }
  }
  return out;
}

// Delta^d applied to a (zero at negative indices) by repeated differencing.
inline std::vector<Rational> repeated_difference(std::vector<Rational> a, long d) {
  for (long step = 0; step < d; ++step) {
    for (std::size_t n = a.size(); n-- > 1;) a[n] = a[n] - a[n - 1];
  }
  return a;
}

// Characteristic polynomial via the Faddeev-LeVerrier recurrence
// M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
inline segre::PolyD faddeev_leverrier(const segre::Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  segre::Matrix<Rational> m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    segre::Matrix<Rational> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    const segre::Matrix<Rational> am = a * m;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return segre::PolyD(c);
}

// Descartes sign variations of a coefficient list.
inline int descartes_variations(const std::vector<Rational>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Roots of p in the open interval (lo, hi) via the Moebius map
// x = (lo + hi*y)/(1 + y), y in (0, inf), Descartes' rule and bisection.
// p must be squarefree.
inline int bisection_count(const segre::PolyD& p, const Rational& lo, const Rational& hi, int depth = 0) {
  using segre::PolyD;
  const auto n = static_cast<unsigned>(p.degree());
  PolyD q;
  const PolyD num(std::vector<Rational>{lo, hi});              // lo + hi*y
  const PolyD den(std::vector<Rational>{Rational(1), Rational(1)});  // 1 + y
  for (unsigned i = 0; i <= n; ++i) {
    q += (segre::pow(num, i) * segre::pow(den, n - i)).scaled(p.coeff(i));
  }
  const int v = descartes_variations(q.coefficients());
  if (v <= 1) return v;
  if (depth > 200) return -1000;  // not squarefree or runaway
  const Rational mid = (lo + hi) / Rational(2);
  const int at_mid = segre::evaluate(p, mid).is_zero() ? 1 : 0;
  return bisection_count(p, lo, mid, depth + 1) + at_mid + bisection_count(p, mid, hi, depth + 1);
}

// Total real roots of a squarefree p: (-B, B) with the Cauchy bound B.
inline int bisection_count_all(const segre::PolyD& p) {
  if (p.degree() < 1) return 0;
  Rational bound(0);
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = segre::abs(p.coeff(static_cast<std::size_t>(i)) / p.leading());
    if (bound < r) bound = r;
  }
  bound += Rational(1);
  return bisection_count(p, -bound, bound);
}

// Left side of the triple binomial identity, summed literally.
inline Rational triple_sum(long da, long db, long i, long j, long n) {
  Rational sum;
  for (long k = 0; k <= n; ++k) {
    sum += segre::binomial(n - k - da - db, n - k) * segre::binomial(k - i + da - 1, k - i) *
           segre::binomial(k - j + db - 1, k - j);
  }
  return sum;
}

// Eigenvector of an upper-triangular symbolic A for eigenvalue lam with
// entry `pivot` set to 1 and entries above it zero, solved from
// (A - lam I) a = 0 by back substitution.
inline std::vector<segre::PolyT> triangular_eigenvector(const segre::Matrix<segre::PolyT>& a,
                                                        const segre::PolyT& lam, std::size_t pivot) {
  using segre::PolyT;
  const std::size_t n = a.rows();
  std::vector<PolyT> v(n);
  v[pivot] = PolyT(1);
  for (std::size_t j = pivot; j-- > 0;) {
    PolyT rhs;
    for (std::size_t m = j + 1; m <= pivot; ++m) rhs -= a(j, m) * v[m];
    const PolyT diag = a(j, j) - lam;
    // diag is a constant in t (a rational function of d).
    if (diag.degree() != 0) throw std::logic_error("diagonal depends on t");
    v[j] = rhs.scaled(diag.leading().inverse());
  }
  return v;
}

inline std::vector<Rational> random_h(std::mt19937_64& rng, long length, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Rational> h;
  for (long i = 0; i < length; ++i) h.push_back(Rational(dist(rng)));
  return h;
}

}  // namespace oracle
