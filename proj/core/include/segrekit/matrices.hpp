#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segrekit/matrix.hpp"
#include "segrekit/rational.hpp"
#include "segrekit/scalars.hpp"

namespace segre {

using RationalMatrix = Matrix<Rational>;
using SymbolicMatrix = Matrix<PolyT>;

/// The db x da transformation matrix with entries
/// C(da+i-j-1, i) * C(db-i+j-1, j).
RationalMatrix mprime(long da, long db);

/// The da x da block M_da(db, t) evaluated at integers, entry (i, j) =
/// C(da+i+t-j-1, da-j-1) * C(db-i-t+j-1, j). For 0 <= t <= db - da this is
/// rows t .. t+da-1 of mprime(da, db).
RationalMatrix msub(long da, long db, long t);

/// M_da(d, t) over Q(d)[t] with d and t indeterminates.
SymbolicMatrix msub_symbolic(long da);

/// V with entry (i, j) = C(da-i-1, j).
RationalMatrix v_matrix(long da);
/// Closed-form inverse of V: entry (i, j) = V(da-1-i, da-1-j) * (-1)^(i+j+da+1).
RationalMatrix v_inverse(long da);

/// W(d, t): entry (i, j) = (-1)^(da+1+j) C(i+t+j, j) C(-d-j-1, da-j-1).
SymbolicMatrix w_matrix(long da);
/// A(d, t): entry (i, j) = (-1)^(da+1) C(-da-t, j-i) C(-d-j-1, da-j-1).
/// Upper triangular.
SymbolicMatrix a_matrix(long da);
/// X(t): entry (j, k) = C(da+t, k-j). Upper unitriangular.
SymbolicMatrix x_matrix(long da);

/// (-1)^(da+1) diag(C(-d-j-1, da-j-1)), the value of X * A.
SymbolicMatrix xa_diagonal(long da);

SymbolicMatrix to_symbolic(const RationalMatrix& m);
RationalMatrix evaluate(const SymbolicMatrix& m, const Rational& d_value, const Rational& t_value);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  // "(i,j): lhs=... rhs=..." for the first mismatching entry.
  std::optional<std::string> first_failure;
};

struct StructureReport {
  long da = 0;
  long db = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Checks, exactly over Q(d)[t]:
///   M * V == W, V * A == W, V * V^-1 == I, X * A == xa_diagonal,
/// and the 180-degree rotation symmetry of mprime(da, db).
StructureReport verify_structure(long da, long db);

}  // namespace segre
