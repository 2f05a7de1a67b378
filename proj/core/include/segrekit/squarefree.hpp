#pragma once

#include <utility>
#include <vector>

#include "segrekit/error.hpp"
#include "segrekit/polynomial.hpp"

namespace segre {

template <class R>
struct SquarefreeFactor {
  Polynomial<R> factor;  // monic, squarefree, positive degree
  int multiplicity;
};

/// Yun's algorithm: p = c * prod factor_i^multiplicity_i with the factors
/// monic, squarefree and pairwise coprime. The constant c is dropped. Factors
/// appear in increasing multiplicity order.
template <class R>
std::vector<SquarefreeFactor<R>> squarefree_decomposition(const Polynomial<R>& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor<R>> out;
  if (p.degree() == 0) return out;

  const Polynomial<R> dp = derivative(p);
  const Polynomial<R> a0 = gcd(p, dp);
  Polynomial<R> b = exact_divide(p, a0);
  Polynomial<R> c = exact_divide(dp, a0);
  Polynomial<R> d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial<R> a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - derivative(b);
  }
  return out;
}

}  // namespace segre
