// Runs the nine acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "segrekit/segrekit.hpp"
#include "segrekit_cli/cli.hpp"

using namespace segre;

namespace {

// Collects failure messages for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

RationalMatrix integer_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Rational> entries;
  std::size_t r = 0, c = 0;
  for (const auto& row : rows) {
    c = row.size();
    ++r;
    for (long x : row) entries.push_back(Rational(x));
  }
  return RationalMatrix(r, c, entries);
}

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

PolyD lin(long c) { return d_poly() + PolyD(c); }

PolyD falling(long lo, long hi) {
  PolyD p(1);
  for (long c = lo; c <= hi; ++c) p *= lin(c);
  return p;
}

void ac1(Checker& c) {
  const RationalMatrix m34 = integer_matrix({{1, 4, 10}, {3, 6, 6}, {6, 6, 3}, {10, 4, 1}});
  const RationalMatrix m0 = integer_matrix({{1, 4, 10}, {3, 6, 6}, {6, 6, 3}});
  const RationalMatrix m1 = integer_matrix({{3, 6, 6}, {6, 6, 3}, {10, 4, 1}});
  c.expect(mprime(3, 4) == m34, "mprime(3,4)");
  c.expect(msub(3, 4, 0) == m0, "msub(3,4,0)");
  c.expect(msub(3, 4, 1) == m1, "msub(3,4,1)");
  const std::string golden34 = "[  1  4 10 ]\n[  3  6  6 ]\n[  6  6  3 ]\n[ 10  4  1 ]\n";
  c.expect(cli_out({"matrix", "--family", "mprime", "--da", "3", "--db", "4"}) == golden34, "mprime(3,4) text");
  c.expect(cli_out({"matrix", "--family", "msub", "--da", "3", "--db", "4", "--t", "0"}) ==
               "[  1  4 10 ]\n[  3  6  6 ]\n[  6  6  3 ]\n",
           "msub(3,4,0) text");
  c.expect(cli_out({"matrix", "--family", "msub", "--da", "3", "--db", "4", "--t", "1"}) ==
               "[  3  6  6 ]\n[  6  6  3 ]\n[ 10  4  1 ]\n",
           "msub(3,4,1) text");
}

void ac2(Checker& c) {
  const std::vector<PolyD> six = {
      PolyD(-1),
      lin(5),
      falling(4, 5).scaled(Rational(-1, 2)),
      falling(3, 5).scaled(Rational(1, 6)),
      falling(2, 5).scaled(Rational(-1, 24)),
      falling(1, 5).scaled(Rational(1, 120)),
  };
  for (long i = 0; i < 6; ++i) c.expect(lambda(6, i).value == six[i], "lambda(6," + std::to_string(i) + ")");

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> dd(1, 9), td(0, 4);
  for (int trial = 0; trial < 5; ++trial) {
    const long d1 = dd(rng), d2 = dd(rng), t1 = td(rng), t2 = td(rng);
    const Rational x(d1), y(d2);
    auto at = [](const PolyD& p, const Rational& v) { return evaluate(p, v); };
    const std::vector<Rational> listed = {
        Rational(1),
        at(lin(4), x) * at(lin(4), y),
        Rational(1, 4) * at(falling(3, 4), x) * at(falling(3, 4), y),
        Rational(1, 36) * at(falling(2, 4), x) * at(falling(2, 4), y),
        Rational(1, 576) * at(falling(1, 4), x) * at(falling(1, 4), y),
    };
    const std::string tag = "(d1,d2)=(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    c.expect(product_eigenvalues(5, {{x, Rational(t1)}, {y, Rational(t2)}}) == listed, "product list " + tag);
    PolyD expected(1);
    for (const auto& v : listed) expected *= d_poly() - PolyD(v);
    c.expect(charpoly(msub(5, d1, t1) * msub(5, d2, t2)) == expected, "charpoly " + tag);
  }
}

void ac3(Checker& c) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dd(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const long da = dd(rng), db = dd(rng);
    std::uniform_int_distribution<long> la(0, da), lb(0, db);
    const RationalSeries a(oracle::random_h(rng, la(rng), -9, 9), da);
    const RationalSeries b(oracle::random_h(rng, lb(rng), -9, 9), db);
    const RationalSeries direct = segre_direct(a, b);
    c.expect(segre_closed_form(a, b) == direct && segre_blockwise(a, b) == direct,
             "instance " + std::to_string(trial));
  }
}

void ac4(Checker& c) {
  for (long da = 1; da <= 6; ++da) {
    const std::string tag = " da=" + std::to_string(da);
    const SymbolicMatrix v = to_symbolic(v_matrix(da)), a = a_matrix(da), w = w_matrix(da);
    c.expect(msub_symbolic(da) * v == w, "M*V == W" + tag);
    c.expect(v * a == w, "V*A == W" + tag);
    c.expect(v_matrix(da) * v_inverse(da) == RationalMatrix::identity(da), "V*Vinv == I" + tag);
    c.expect(x_matrix(da) * a == xa_diagonal(da), "X*A == diag" + tag);
    for (long i = 0; i < da; ++i) {
      for (long j = 0; j < i; ++j) c.expect(a(i, j).is_zero(), "A upper triangular" + tag);
      c.expect(a(i, i) == PolyT(lambda(da, da - 1 - i).value), "A diagonal" + tag);
    }
  }
  for (long da = 1; da <= 5; ++da)
    for (long db = 1; db <= 5; ++db)
      for (long i = 0; i < da; ++i)
        for (long j = 0; j < db; ++j)
          for (long n = 0; n <= da + db - 2; ++n)
            c.expect(oracle::triple_sum(da, db, i, j, n) ==
                         binomial(da + j - i - 1, n - i) * binomial(db - j + i - 1, n - j),
                     "binomial identity");
}

void ac5(Checker& c) {
  for (long da = 1; da <= 5; ++da) {
    const SymbolicMatrix a_mat = a_matrix(da), m_mat = msub_symbolic(da);
    for (long i = 0; i < da; ++i) {
      const std::string tag = " da=" + std::to_string(da) + " i=" + std::to_string(i);
      const auto back = eigenvector_a_backsub(da, i);
      c.expect(back == eigenvector_a_chain_sum(da, i), "two routes" + tag);
      const PolyT lam(lambda(da, i).value);
      std::vector<PolyT> la, lb;
      for (const auto& x : back) la.push_back(x * lam);
      c.expect(a_mat * back == la, "A*a" + tag);
      const auto b = eigenvector_m(da, i).entries;
      for (const auto& x : b) lb.push_back(x * lam);
      c.expect(m_mat * b == lb, "M*b" + tag);
    }
  }
}

void ac6(Checker& c) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> da_d(1, 5), n_d(1, 3), d_d(1, 9), t_d(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const long da = da_d(rng);
    std::vector<std::pair<long, long>> params;
    for (long k = 0, n = n_d(rng); k < n; ++k) params.emplace_back(d_d(rng), t_d(rng));
    c.expect(verify_product_spectrum(da, params).passed, "instance " + std::to_string(trial));
  }
}

void ac7(Checker& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 8);
  int tested = 0;
  while (tested < 100) {
    const PolyD p(oracle::random_h(rng, deg(rng) + 1, -9, 9));
    if (p.degree() < 1 || gcd(p, derivative(p)).degree() > 0) continue;
    ++tested;
    c.expect(sturm_count(p, std::nullopt, std::nullopt) == oracle::bisection_count_all(p),
             "random polynomial " + std::to_string(tested));
  }
  for (unsigned k = 1; k <= 5; ++k) {
    const auto r = is_real_rooted(pow(PolyD(std::vector<Rational>{Rational(1), Rational(1)}), k));
    c.expect(r.real_roots_with_multiplicity == static_cast<int>(k) && r.is_real_rooted,
             "(1+t)^" + std::to_string(k));
  }
}

void ac8(Checker& c) {
  const std::vector<RationalSeries> inputs = {
      RationalSeries({Rational(1), Rational(1), Rational(1)}, 3),
      RationalSeries({Rational(1), Rational(0), Rational(1)}, 3),
      RationalSeries({Rational(1), Rational(4), Rational(1)}, 3),
      RationalSeries({Rational(1), Rational(1), Rational(1), Rational(1)}, 4),
  };
  const auto dir = std::filesystem::temp_directory_path() / "segrekit_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> args = {"conjecture"};
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const ConjectureTrace trace = find_min_r(inputs[k], 8);
    const bool palindromic_input = is_palindromic(inputs[k].h()) == true;
    c.expect(trace.records.size() == 8, "trace length");
    for (const auto& rec : trace.records) {
      const std::string tag = " input " + std::to_string(k) + " r=" + std::to_string(rec.r);
      if (is_nonnegative(rec.h)) c.expect(rec.report.positive_roots_with_multiplicity == 0, "positive root" + tag);
      if (palindromic_input) c.expect(is_palindromic(rec.h) == true, "palindrome lost" + tag);
    }
    const auto path = dir / ("input" + std::to_string(k) + ".json");
    std::ofstream(path) << to_json(inputs[k]).dump() << '\n';
    args.push_back(path.string());
  }
  args.insert(args.end(), {"--rmax", "8"});
  int code = 0;
  const std::string table = cli_out(args, &code);
  c.expect(code == 0 && table.find("min_R") != std::string::npos, "verdict table");
  std::cout << table << '\n';
}

void ac9(Checker& c) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dd(1, 6), gap_d(1, 3), v(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const long da = dd(rng), db = dd(rng);
    const RationalSeries a(oracle::random_h(rng, da, 0, 9), da), b(oracle::random_h(rng, db, 0, 9), db);
    c.expect(check_preservation(a, b).nonneg_out, "nonnegativity " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const long gap = gap_d(rng);
    auto palindrome = [&](long m) {
      HVector h(static_cast<std::size_t>(m + 1));
      for (long i = 0; i <= m / 2; ++i) h[i] = h[m - i] = Rational(v(rng));
      if (h.front().is_zero()) h.front() = h.back() = Rational(1);
      return RationalSeries(h, m + gap);
    };
    const RationalSeries a = palindrome(dd(rng) - 1), b = palindrome(dd(rng) - 1);
    const auto r = check_preservation(a, b);
    c.expect(r.symmetric_applicable && r.symmetric_out == true, "symmetry " + std::to_string(trial));
  }
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "golden transformation matrices", 1, ac1},
      {"AC2", "golden eigenvalue lists", 1, ac2},
      {"AC3", "three Segre algorithms agree on 200 instances", 10, ac3},
      {"AC4", "matrix identity suite, da <= 6", 60, ac4},
      {"AC5", "symbolic eigen-equations, da <= 5", 120, ac5},
      {"AC6", "product spectra on 50 parameter lists", 30, ac6},
      {"AC7", "Sturm counts against bisection", 10, ac7},
      {"AC8", "conjecture traces to r = 8", 300, ac8},
      {"AC9", "nonnegativity and symmetry preservation", 10, ac9},
  };
  std::vector<std::string> lines;
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checker);
    } catch (const std::exception& e) {
      checker.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) checker.failures.push_back("exceeded the time limit");
    const bool ok = checker.failures.empty();
    if (!ok) ++failed;
    std::ostringstream line;
    line << cr.id << ' ' << (ok ? "PASS" : "FAIL") << "  " << cr.title << "  (" << std::fixed
         << std::setprecision(3) << secs << " s, limit " << std::defaultfloat << cr.limit_seconds << " s)";
    for (const auto& f : checker.failures) line << "\n      " << f;
    lines.push_back(line.str());
  }
  for (const auto& l : lines) std::cout << l << '\n';
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
