#include "segrekit/spectra.hpp"

#include <string>
#include <utility>

#include "segrekit/binomial.hpp"
#include "segrekit/error.hpp"

namespace segre {

namespace {

void require_index(long da, long i) {
  if (da < 1) throw DomainError("da must be >= 1, got " + std::to_string(da));
  if (i < 0 || i > da - 1) {
    throw DomainError("eigenvalue index i = " + std::to_string(i) + " outside [0, " +
                      std::to_string(da - 1) + "]");
  }
}

// C(d + da - 1, k) in Q[d].
PolyD top_binomial(long da, long k) {
  return binomial_extended(d_poly() + PolyD(Rational(da - 1)), k);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<PolyT> scale(const std::vector<PolyT>& v, const PolyT& c) {
  std::vector<PolyT> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * c);
  return out;
}

// sum over chains 0 = i_0 < i_1 < ... < i_{m+1} = length of
// prod_k g_{i_k} C(da+t, i_k - i_{k-1}); length >= 1.
PolyT chain_sum(long length, const std::vector<PolyT>& g, const PolyT& top) {
  PolyT total;
  const long interior = length - 1;
  for (unsigned long mask = 0; mask < (1UL << interior); ++mask) {
    PolyT term(1);
    long prev = 0;
    for (long step = 1; step <= length; ++step) {
      const bool stop = step == length || ((mask >> (step - 1)) & 1UL) != 0;
      if (!stop) continue;
      term = term * g[static_cast<std::size_t>(step)] * binomial_extended(top, step - prev);
      prev = step;
    }
    total += term;
  }
  return total;
}

}  // namespace

Eigenvalue lambda(long da, long i) {
  require_index(da, i);
  return {da, i, top_binomial(da, i).scaled(Rational(sign_power(da + i + 1)))};
}

std::vector<Eigenvalue> spectrum(long da) {
  std::vector<Eigenvalue> out;
  for (long i = 0; i < da; ++i) out.push_back(lambda(da, i));
  return out;
}

std::vector<Rational> product_eigenvalues(long da, const std::vector<SpectrumParam>& params) {
  if (params.empty()) throw DomainError("product_eigenvalues needs at least one factor");
  std::vector<Rational> out;
  for (long i = 0; i < da; ++i) {
    const PolyD value = lambda(da, i).value;
    Rational prod(1);
    for (const auto& p : params) prod *= evaluate(value, p.d);
    out.push_back(prod);
  }
  return out;
}

PolyD charpoly(const RationalMatrix& m) {
  if (!m.is_square()) {
    throw DomainError("charpoly of a non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  RationalMatrix h = m;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t target = col + 1;
    std::size_t pivot = target;
    while (pivot < n && h(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != target) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(pivot, j), h(target, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, pivot), h(i, target));
    }
    for (std::size_t r = target + 1; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      const Rational u = h(r, col) / h(target, col);
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(target, j);
      for (std::size_t i = 0; i < n; ++i) h(i, target) += u * h(i, r);
    }
  }

  const PolyD x = PolyD::variable();
  std::vector<PolyD> p;
  p.reserve(n + 1);
  p.emplace_back(Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    PolyD next = (x - PolyD(h(k, k))) * p[k];
    Rational sub(1);
    for (std::size_t i = 1; i <= k; ++i) {
      sub *= h(k - i + 1, k - i);
      if (sub.is_zero()) break;
      next -= p[k - i].scaled(sub * h(k - i, k));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

ProductSpectrumReport verify_product_spectrum(long da,
                                              const std::vector<std::pair<long, long>>& params) {
  if (params.empty()) throw DomainError("verify_product_spectrum needs at least one factor");
  ProductSpectrumReport r;
  r.da = da;
  r.params = params;
  r.product = RationalMatrix::identity(static_cast<std::size_t>(da));
  std::vector<SpectrumParam> values;
  for (const auto& [d, t] : params) {
    r.product = r.product * msub(da, d, t);
    values.push_back({Rational(d), Rational(t)});
  }
  r.charpoly = charpoly(r.product);
  r.eigenvalues = product_eigenvalues(da, values);
  r.expected = PolyD(Rational(1));
  const PolyD x = PolyD::variable();
  for (const auto& e : r.eigenvalues) r.expected = r.expected * (x - PolyD(e));
  r.passed = r.charpoly == r.expected;
  return r;
}

FracD g_coeff(long da, long i, long k) {
  require_index(da, i);
  if (k < 1 || k > da - i - 1) {
    throw DomainError("g_k index k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(da - i - 1) + "]");
  }
  const PolyD bi = top_binomial(da, i);
  const PolyD den = top_binomial(da, i + k).scaled(Rational(sign_power(k))) - bi;
  if (den.is_zero()) throw InternalError("g_k denominator vanishes identically");
  return FracD(bi, den);
}

std::vector<PolyT> eigenvector_a_backsub(long da, long i) {
  require_index(da, i);
  const long pivot = da - i - 1;
  const PolyT top = t_symbol() + PolyT(da);
  const PolyD bi = top_binomial(da, i);
  std::vector<PolyT> a(static_cast<std::size_t>(da));
  a[static_cast<std::size_t>(pivot)] = PolyT(1);
  for (long j = pivot - 1; j >= 0; --j) {
    const FracD c = FracD(bi.scaled(Rational(sign_power(i + da + j + 1))), top_binomial(da, da - j - 1));
    const FracD factor = c / (FracD(1) - c);
    PolyT sum;
    for (long m = j + 1; m <= pivot; ++m) {
      sum += a[static_cast<std::size_t>(m)] * binomial_extended(top, m - j);
    }
    a[static_cast<std::size_t>(j)] = sum * PolyT(factor);
  }
  return a;
}

std::vector<PolyT> eigenvector_a_chain_sum(long da, long i) {
  require_index(da, i);
  const long pivot = da - i - 1;
  const PolyT top = t_symbol() + PolyT(da);
  std::vector<PolyT> g(static_cast<std::size_t>(pivot + 1));
  for (long k = 1; k <= pivot; ++k) g[static_cast<std::size_t>(k)] = PolyT(g_coeff(da, i, k));
  std::vector<PolyT> a(static_cast<std::size_t>(da));
  a[static_cast<std::size_t>(pivot)] = PolyT(1);
  for (long j = 0; j < pivot; ++j) {
    a[static_cast<std::size_t>(j)] = chain_sum(pivot - j, g, top);
  }
  return a;
}

EigvecA eigenvector_a(long da, long i) {
  auto backsub = eigenvector_a_backsub(da, i);
  if (backsub != eigenvector_a_chain_sum(da, i)) {
    throw InternalError("eigenvector routes disagree for da=" + std::to_string(da) +
                        ", i=" + std::to_string(i));
  }
  return {da, i, std::move(backsub)};
}

std::vector<PolyT> eigenvector_m_closed(long da, long i) {
  require_index(da, i);
  const long pivot = da - i - 1;
  const PolyT top = t_symbol() + PolyT(da);
  std::vector<PolyT> g(static_cast<std::size_t>(pivot + 1));
  for (long k = 1; k <= pivot; ++k) g[static_cast<std::size_t>(k)] = PolyT(g_coeff(da, i, k));
  std::vector<PolyT> b;
  for (long k = 0; k < da; ++k) {
    PolyT bk(binomial(da - k - 1, pivot));
    for (long j = 0; j <= pivot - 1; ++j) {
      const Rational weight = binomial(da - k - 1, j);
      if (weight.is_zero()) continue;
      bk += chain_sum(pivot - j, g, top) * PolyT(weight);
    }
    b.push_back(std::move(bk));
  }
  return b;
}

EigvecM eigenvector_m(long da, long i) {
  const EigvecA a = eigenvector_a(da, i);
  std::vector<PolyT> b = to_symbolic(v_matrix(da)) * a.entries;
  if (b != eigenvector_m_closed(da, i)) {
    throw InternalError("closed b formula disagrees with V*a for da=" + std::to_string(da) +
                        ", i=" + std::to_string(i));
  }
  return {da, i, std::move(b)};
}

EigenReport eigen_report(long da, long i) {
  EigenReport r;
  r.lambda = lambda(da, i);
  r.a = eigenvector_a(da, i);
  r.b = eigenvector_m(da, i);
  const PolyT lam(FracD(r.lambda.value));
  r.eigen_eq_a = a_matrix(da) * r.a.entries == scale(r.a.entries, lam);
  r.eigen_eq_m = msub_symbolic(da) * r.b.entries == scale(r.b.entries, lam);
  return r;
}

CoincidenceReport coincidence_locus(long da, long i, long d_lo, long d_hi) {
  require_index(da, i);
  if (d_lo > d_hi) throw DomainError("empty d range");
  CoincidenceReport r;
  r.da = da;
  r.i = i;
  const auto all = spectrum(da);
  for (long d = d_lo; d <= d_hi; ++d) {
    StatedPartner s;
    s.d = d;
    s.partner = da - i + d - 1;
    const bool parity = ((d - da - 1) % 2) == 0;
    s.condition_holds = i <= floor_div(da + d - 1, 2) && parity;
    s.partner_in_range = s.partner >= 0 && s.partner <= da - 1;
    if (s.partner_in_range) {
      s.values_equal = evaluate(all[static_cast<std::size_t>(i)].value, Rational(d)) ==
                       evaluate(all[static_cast<std::size_t>(s.partner)].value, Rational(d));
    }
    r.stated.push_back(s);

    std::vector<Rational> values;
    for (const auto& e : all) values.push_back(evaluate(e.value, Rational(d)));
    for (long p = 0; p < da; ++p) {
      for (long q = p + 1; q < da; ++q) {
        if (values[static_cast<std::size_t>(p)] == values[static_cast<std::size_t>(q)]) {
          r.observed.push_back({d, p, q, values[static_cast<std::size_t>(p)]});
        }
      }
    }
  }
  return r;
}

}  // namespace segre
