#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "segrekit/error.hpp"
#include "segrekit/matrices.hpp"
#include "segrekit/series.hpp"

using namespace segre;

namespace {

HVector hv(std::initializer_list<long> xs) {
  HVector out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

RationalSeries random_series(std::mt19937_64& rng, long max_d) {
  std::uniform_int_distribution<long> dd(1, max_d);
  const long d = dd(rng);
  std::uniform_int_distribution<long> len(0, d);
  return RationalSeries(oracle::random_h(rng, len(rng), -9, 9), d);
}

// Oracle for the Segre product: termwise products, then repeated differencing.
RationalSeries oracle_segre(const RationalSeries& a, const RationalSeries& b) {
  const long d = a.d() + b.d() - 1;
  const auto sa = oracle::convolve_series(a.h(), a.d(), d);
  const auto sb = oracle::convolve_series(b.h(), b.d(), d);
  std::vector<Rational> prod(static_cast<std::size_t>(d));
  for (std::size_t n = 0; n < prod.size(); ++n) prod[n] = sa[n] * sb[n];
  return RationalSeries(oracle::repeated_difference(prod, d), d);
}

}  // namespace

TEST_CASE("series construction") {
  CHECK_THROWS_AS(RationalSeries(hv({1}), 0), DomainError);
  CHECK_THROWS_AS(RationalSeries(hv({1, 2, 3}), 2), DomainError);
  const RationalSeries zero(HVector{}, 3);
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.last_nonzero());
  const RationalSeries s(hv({1, 2, 0}), 3);
  CHECK(s.last_nonzero() == 1);
  CHECK(s.h_at(5) == Rational(0));
  CHECK(s.h_at(-1) == Rational(0));
}

TEST_CASE("coeff_at examples") {
  CHECK(coeff_at(RationalSeries(hv({1}), 2), 7) == Rational(8));
  CHECK(coeff_at(RationalSeries(hv({1, 1}), 2), 5) == Rational(11));
  CHECK(coeff_at(RationalSeries(hv({1, 6, 1}), 3), 4) == Rational(81));
  CHECK(coeff_at(RationalSeries(hv({1, 6, 1}), 3), -2) == Rational(0));
  CHECK(oracle::convolve_series(hv({1, 6, 1}), 3, 5)[4] == Rational(81));
}

TEST_CASE("coeff_at matches direct convolution") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalSeries s = random_series(rng, 8);
    CHECK(expand(s, 15) == oracle::convolve_series(s.h(), s.d(), 15));
  }
}

TEST_CASE("h_from_sequence") {
  std::vector<Rational> a;
  for (long n = 0; n < 6; ++n) a.push_back(Rational(n + 1));
  CHECK(h_from_sequence(a, 2) == hv({1, 0}));
  CHECK(h_from_sequence(hv({1, 9, 25}), 3) == hv({1, 6, 1}));
  CHECK_THROWS_AS(h_from_sequence(hv({1, 9}), 3), DomainError);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalSeries s = random_series(rng, 8);
    HVector padded = s.h();
    padded.resize(static_cast<std::size_t>(s.d()));
    CHECK(h_from_sequence(expand(s, s.d()), s.d()) == padded);
  }
}

TEST_CASE("rev_slice") {
  CHECK(rev_slice(hv({1, 2, 3}), 2, 3) == hv({3, 2, 1}));
  CHECK(rev_slice(hv({1, 2, 3}), 1, 3) == hv({2, 1, 0}));
  CHECK(rev_slice(hv({1, 2, 3}), 4, 2) == hv({0, 0}));
  CHECK(rev_slice(hv({1, 2, 3}), 3, 2) == hv({0, 3}));
  CHECK(rev_slice(hv({1, 2, 3}), 4, 3) == hv({0, 0, 3}));
}

TEST_CASE("segre product examples") {
  const RationalSeries one(hv({1}), 2);
  const RationalSeries odd(hv({1, 1}), 2);
  for (auto algo : {segre_direct, segre_closed_form, segre_blockwise}) {
    CHECK(algo(one, one) == RationalSeries(hv({1, 1, 0}), 3));
    CHECK(algo(odd, odd) == RationalSeries(hv({1, 6, 1}), 3));
    const RationalSeries a(hv({1, 0, 0}), 3), b(hv({1, 0, 0, 0}), 4);
    CHECK(algo(a, b) == RationalSeries(hv({1, 6, 3, 0, 0, 0}), 6));
  }
  CHECK(oracle_segre(one, one) == RationalSeries(hv({1, 1, 0}), 3));
  CHECK(oracle_segre(odd, odd) == RationalSeries(hv({1, 6, 1}), 3));
}

TEST_CASE("block formula against the transformation matrix") {
  const RationalSeries a(hv({1, 0, 0}), 3), b(hv({1, 0, 0, 0}), 4);
  CHECK(segre_block_entry(a, b, 0) == Rational(1));
  CHECK(segre_block_entry(a, b, 0) == msub(3, 4, 0)(0, 0));
  CHECK(mprime(3, 4)(3, 0) == Rational(10));
  // h_3 of this product is zero; the value 10 is the matrix entry above.
  CHECK(segre_block_entry(a, b, 3) == Rational(0));
}

TEST_CASE("block formula vanishes one past the numerator degree") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalSeries a = random_series(rng, 6), b = random_series(rng, 6);
    CHECK(segre_block_entry(a, b, a.d() + b.d() - 1) == Rational(0));
  }
}

TEST_CASE("triple agreement with the convolution oracle") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalSeries a = random_series(rng, 6), b = random_series(rng, 6);
    const RationalSeries expected = oracle_segre(a, b);
    CHECK(segre_direct(a, b) == expected);
    CHECK(segre_closed_form(a, b) == expected);
    CHECK(segre_blockwise(a, b) == expected);
  }
}

TEST_CASE("segre with the zero series") {
  const RationalSeries zero(HVector{}, 3), s(hv({1, 2}), 2);
  const RationalSeries out = segre_direct(zero, s);
  CHECK(out.d() == 4);
  CHECK(out.is_zero());
  CHECK(segre_blockwise(zero, s).is_zero());
  CHECK(segre_closed_form(s, zero).is_zero());
}

TEST_CASE("triple binomial identity sweep") {
  for (long da = 1; da <= 5; ++da) {
    for (long db = 1; db <= 5; ++db) {
      for (long i = 0; i < da; ++i) {
        for (long j = 0; j < db; ++j) {
          for (long n = 0; n <= da + db - 2; ++n) {
            CHECK(oracle::triple_sum(da, db, i, j, n) ==
                  binomial(da + j - i - 1, n - i) * binomial(db - j + i - 1, n - j));
          }
        }
      }
    }
  }
}

TEST_CASE("reduce strips common (1 - t) factors") {
  // (1 - t^2)/(1 - t)^3 = (1 + t)/(1 - t)^2
  const RationalSeries s(hv({1, 0, -1}), 3);
  CHECK(reduce(s) == RationalSeries(hv({1, 1}), 2));
  const RationalSeries plain(hv({1, 6, 1}), 3);
  CHECK(reduce(plain) == plain);
  CHECK(expand(reduce(s), 10) == expand(s, 10));
  // segre never reduces implicitly
  CHECK(segre_direct(s, s).d() == 5);
}

TEST_CASE("palindromes and nonnegativity") {
  CHECK(is_palindromic(hv({1, 6, 1})) == true);
  CHECK(is_palindromic(hv({1, 1, 0})) == true);
  CHECK(is_palindromic(hv({1, 2, 0})) == false);
  CHECK_FALSE(is_palindromic(hv({0, 0})).has_value());
  CHECK(is_nonnegative(hv({0, 3})));
  CHECK_FALSE(is_nonnegative(hv({1, -1})));
}

TEST_CASE("check_preservation examples") {
  const RationalSeries odd(hv({1, 1}), 2);
  auto r = check_preservation(odd, odd);
  CHECK(r.nonneg_out);
  CHECK(r.symmetric_out == true);

  r = check_preservation(RationalSeries(hv({1, -1}), 2), RationalSeries(hv({1}), 1));
  CHECK_FALSE(r.nonneg_out);
  CHECK_FALSE(r.nonneg_in[0]);

  const RationalSeries one(hv({1}), 2);
  r = check_preservation(one, one);
  CHECK(r.symmetric_applicable);
  CHECK(r.symmetric_out == true);
  CHECK(r.product == RationalSeries(hv({1, 1, 0}), 3));

  r = check_preservation(RationalSeries(HVector{}, 2), one);
  CHECK_FALSE(r.symmetric_applicable);
  CHECK_FALSE(r.symmetric_in[0].has_value());
  CHECK_FALSE(r.symmetric_out.has_value());
}

TEST_CASE("preservation properties on random inputs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<long> dd(1, 6);
    const long da = dd(rng), db = dd(rng);
    const RationalSeries a(oracle::random_h(rng, da, 0, 9), da);
    const RationalSeries b(oracle::random_h(rng, db, 0, 9), db);
    CHECK(check_preservation(a, b).nonneg_out);
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<long> dd(1, 6);
    const long gap = std::uniform_int_distribution<long>(1, 3)(rng);
    auto palindrome = [&](long m) {
      HVector h(static_cast<std::size_t>(m + 1));
      for (long i = 0; i <= m / 2; ++i) {
        const Rational v(std::uniform_int_distribution<long>(-9, 9)(rng));
        h[static_cast<std::size_t>(i)] = v;
        h[static_cast<std::size_t>(m - i)] = v;
      }
      if (h.front().is_zero()) h.front() = h.back() = Rational(1);
      return RationalSeries(h, m + gap);
    };
    const RationalSeries a = palindrome(dd(rng) - 1), b = palindrome(dd(rng) - 1);
    const auto r = check_preservation(a, b);
    CHECK(r.symmetric_applicable);
    CHECK(r.symmetric_in[0] == true);
    CHECK(r.symmetric_in[1] == true);
    CHECK(r.symmetric_out == true);
  }
}
