#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "segrekit/matrices.hpp"
#include "segrekit/scalars.hpp"

namespace segre {

/// lambda_da(d, i) = (-1)^(da+i+1) C(da+d-1, i) as a polynomial in d of
/// degree i.
struct Eigenvalue {
  long da = 0;
  long i = 0;
  PolyD value;
};

/// Throws DomainError unless 0 <= i <= da-1.
Eigenvalue lambda(long da, long i);

/// All eigenvalues for i = 0 .. da-1, in that order.
std::vector<Eigenvalue> spectrum(long da);

struct SpectrumParam {
  Rational d;
  Rational t;
};

/// Entry i is prod_j lambda_da(d_j, i).
std::vector<Rational> product_eigenvalues(long da, const std::vector<SpectrumParam>& params);

/// Monic characteristic polynomial det(x I - m), by reduction to upper
/// Hessenberg form with exact pivoting. Throws DomainError if m is not square.
PolyD charpoly(const RationalMatrix& m);

struct ProductSpectrumReport {
  long da = 0;
  std::vector<std::pair<long, long>> params;
  RationalMatrix product;
  PolyD charpoly;
  PolyD expected;  // prod_i (x - prod_j lambda_da(d_j, i))
  std::vector<Rational> eigenvalues;
  bool passed = false;
};

/// Multiplies msub(da, d_j, t_j) over all params and compares its
/// characteristic polynomial with the predicted spectrum.
ProductSpectrumReport verify_product_spectrum(long da, const std::vector<std::pair<long, long>>& params);

/// g_k = ((-1)^k C(d+da-1, i+k) / C(d+da-1, i) - 1)^(-1) for
/// 1 <= k <= da-i-1.
FracD g_coeff(long da, long i, long k);

struct EigvecA {
  long da = 0;
  long i = 0;
  std::vector<PolyT> entries;
};

struct EigvecM {
  long da = 0;
  long i = 0;
  std::vector<PolyT> entries;
};

/// Eigenvector of A(d, t) for lambda_da(d, i), normalized so that
/// entry da-i-1 is 1, obtained by backward substitution through the
/// X-transformed eigen-equation.
std::vector<PolyT> eigenvector_a_backsub(long da, long i);

/// The same eigenvector through the closed sum over index chains
/// 0 = i_0 < i_1 < ... < i_{m+1} of products g_{i_k} C(da+t, i_k - i_{k-1}).
std::vector<PolyT> eigenvector_a_chain_sum(long da, long i);

/// Computes both routes and throws InternalError if they disagree.
EigvecA eigenvector_a(long da, long i);

/// b_k = C(da-k-1, da-i-1) + sum_j C(da-k-1, j) a_j, evaluated directly.
std::vector<PolyT> eigenvector_m_closed(long da, long i);

/// b = V * a; cross-checked against the closed b_k formula (InternalError
/// on mismatch).
EigvecM eigenvector_m(long da, long i);

struct EigenReport {
  Eigenvalue lambda;
  EigvecA a;
  EigvecM b;
  bool eigen_eq_a = false;  // A * a == lambda * a over Q(d)[t]
  bool eigen_eq_m = false;  // M * b == lambda * b over Q(d)[t]
};

EigenReport eigen_report(long da, long i);

struct Collision {
  long d = 0;
  long i = 0;
  long partner = 0;
  Rational value;
};

struct StatedPartner {
  long d = 0;
  long partner = 0;          // da - i + d - 1
  bool condition_holds = false;  // 0 <= i <= floor((da+d-1)/2) and d == da+1 mod 2
  bool partner_in_range = false;  // 0 <= partner <= da-1
  std::optional<bool> values_equal;  // evaluated when the partner is in range
};

struct CoincidenceReport {
  long da = 0;
  long i = 0;
  std::vector<StatedPartner> stated;   // one per d in the sweep
  std::vector<Collision> observed;     // all pairs {i, i'} (i < i') equal at some d
};

/// Sweeps integer d in [d_lo, d_hi], reporting the stated collision pattern
/// lambda(d, i) = lambda(d, da-i+d-1) for the given i and every observed
/// equality between evaluated eigenvalues.
CoincidenceReport coincidence_locus(long da, long i, long d_lo, long d_hi);

}  // namespace segre
