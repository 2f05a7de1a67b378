#include "segrekit/matrices.hpp"

#include <algorithm>
#include <string>

#include "segrekit/binomial.hpp"
#include "segrekit/error.hpp"
#include "segrekit/format.hpp"

namespace segre {

namespace {

void require_positive(long value, const char* name) {
  if (value < 1) {
    throw DomainError(std::string(name) + " must be >= 1, got " + std::to_string(value));
  }
}

long as_long(std::size_t v) { return static_cast<long>(v); }

// The entry C(-d-j-1, da-j-1) shared by W, A and X*A: a polynomial in d.
PolyT tail_factor(long da, long j) {
  const PolyT top = -d_symbol() - PolyT(j + 1);
  return binomial_extended(top, da - j - 1);
}

template <class S>
IdentityCheck compare(std::string name, const Matrix<S>& lhs, const Matrix<S>& rhs,
                      std::string (*show)(const S&)) {
  IdentityCheck check{std::move(name), true, std::nullopt};
  const auto diff = first_difference(lhs, rhs);
  if (diff) {
    const auto [i, j] = *diff;
    check.passed = false;
    check.first_failure = "(" + std::to_string(i) + "," + std::to_string(j) +
                          "): lhs=" + show(lhs(i, j)) + " rhs=" + show(rhs(i, j));
  }
  return check;
}

std::string show_rational(const Rational& x) { return x.str(); }
std::string show_symbolic(const PolyT& x) { return to_string(x); }

}  // namespace

RationalMatrix mprime(long da, long db) {
  require_positive(da, "da");
  require_positive(db, "db");
  return RationalMatrix::generate(
      static_cast<std::size_t>(db), static_cast<std::size_t>(da), [&](std::size_t r, std::size_t c) {
        const long i = as_long(r);
        const long j = as_long(c);
        return binomial(da + i - j - 1, i) * binomial(db - i + j - 1, j);
      });
}

RationalMatrix msub(long da, long db, long t) {
  require_positive(da, "da");
  return RationalMatrix::generate(
      static_cast<std::size_t>(da), static_cast<std::size_t>(da), [&](std::size_t r, std::size_t c) {
        const long i = as_long(r);
        const long j = as_long(c);
        return binomial(da + i + t - j - 1, da - j - 1) * binomial(db - i - t + j - 1, j);
      });
}

SymbolicMatrix msub_symbolic(long da) {
  require_positive(da, "da");
  const PolyT t = t_symbol();
  const PolyT d = d_symbol();
  return SymbolicMatrix::generate(
      static_cast<std::size_t>(da), static_cast<std::size_t>(da), [&](std::size_t r, std::size_t c) {
        const long i = as_long(r);
        const long j = as_long(c);
        return binomial_extended(t + PolyT(da + i - j - 1), da - j - 1) *
               binomial_extended(d - t + PolyT(j - i - 1), j);
      });
}

RationalMatrix v_matrix(long da) {
  require_positive(da, "da");
  return RationalMatrix::generate(
      static_cast<std::size_t>(da), static_cast<std::size_t>(da),
      [&](std::size_t i, std::size_t j) { return binomial(da - as_long(i) - 1, as_long(j)); });
}

RationalMatrix v_inverse(long da) {
  const RationalMatrix v = v_matrix(da);
  const auto n = static_cast<std::size_t>(da);
  return RationalMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    return v(n - 1 - i, n - 1 - j) * Rational(sign_power(as_long(i + j) + da + 1));
  });
}

SymbolicMatrix w_matrix(long da) {
  require_positive(da, "da");
  const PolyT t = t_symbol();
  return SymbolicMatrix::generate(
      static_cast<std::size_t>(da), static_cast<std::size_t>(da), [&](std::size_t r, std::size_t c) {
        const long i = as_long(r);
        const long j = as_long(c);
        return PolyT(sign_power(da + 1 + j)) * binomial_extended(t + PolyT(i + j), j) *
               tail_factor(da, j);
      });
}

SymbolicMatrix a_matrix(long da) {
  require_positive(da, "da");
  const PolyT t = t_symbol();
  const PolyT top = -t - PolyT(da);
  return SymbolicMatrix::generate(
      static_cast<std::size_t>(da), static_cast<std::size_t>(da), [&](std::size_t r, std::size_t c) {
        const long i = as_long(r);
        const long j = as_long(c);
        if (j < i) return PolyT();
        return PolyT(sign_power(da + 1)) * binomial_extended(top, j - i) * tail_factor(da, j);
      });
}

SymbolicMatrix x_matrix(long da) {
  require_positive(da, "da");
  const PolyT top = t_symbol() + PolyT(da);
  return SymbolicMatrix::generate(
      static_cast<std::size_t>(da), static_cast<std::size_t>(da),
      [&](std::size_t j, std::size_t k) { return binomial_extended(top, as_long(k) - as_long(j)); });
}

SymbolicMatrix xa_diagonal(long da) {
  require_positive(da, "da");
  std::vector<PolyT> diag;
  for (long j = 0; j < da; ++j) diag.push_back(PolyT(sign_power(da + 1)) * tail_factor(da, j));
  return SymbolicMatrix::diagonal(diag);
}

SymbolicMatrix to_symbolic(const RationalMatrix& m) {
  return m.map([](const Rational& x) { return PolyT(x); });
}

RationalMatrix evaluate(const SymbolicMatrix& m, const Rational& d_value, const Rational& t_value) {
  return m.map([&](const PolyT& x) { return evaluate(x, d_value, t_value); });
}

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

StructureReport verify_structure(long da, long db) {
  require_positive(da, "da");
  require_positive(db, "db");
  StructureReport report;
  report.da = da;
  report.db = db;

  const SymbolicMatrix m = msub_symbolic(da);
  const SymbolicMatrix v = to_symbolic(v_matrix(da));
  const SymbolicMatrix w = w_matrix(da);
  const SymbolicMatrix a = a_matrix(da);

  report.checks.push_back(compare("M*V == W", m * v, w, &show_symbolic));
  report.checks.push_back(compare("V*A == W", v * a, w, &show_symbolic));
  report.checks.push_back(compare("V*Vinv == I", v_matrix(da) * v_inverse(da),
                                  RationalMatrix::identity(static_cast<std::size_t>(da)),
                                  &show_rational));
  report.checks.push_back(compare("X*A == diag", x_matrix(da) * a, xa_diagonal(da), &show_symbolic));

  const RationalMatrix mp = mprime(da, db);
  const RationalMatrix rotated = RationalMatrix::generate(
      mp.rows(), mp.cols(),
      [&](std::size_t i, std::size_t j) { return mp(mp.rows() - 1 - i, mp.cols() - 1 - j); });
  report.checks.push_back(compare("M' rotation symmetry", mp, rotated, &show_rational));
  return report;
}

}  // namespace segre
