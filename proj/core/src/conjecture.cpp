#include "segrekit/conjecture.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "segrekit/error.hpp"
#include "segrekit/squarefree.hpp"

namespace segre {

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

PolyD positive_normalize(const PolyD& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / abs(p.leading()));
}

}  // namespace

SturmSequence::SturmSequence(const PolyD& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(positive_normalize(p));
  PolyD next = positive_normalize(derivative(p));
  while (!next.is_zero()) {
    chain_.push_back(next);
    const std::size_t n = chain_.size();
    next = positive_normalize(-divmod(chain_[n - 2], chain_[n - 1]).remainder);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(evaluate(q, x).sign());
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity(bool negative) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) {
    int s = q.leading().sign();
    if (negative && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int sturm_count(const PolyD& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) throw DomainError("sturm_count of the zero polynomial");
  if (lo && hi && !(*lo < *hi)) {
    throw DomainError("empty interval (" + lo->str() + ", " + hi->str() + "]");
  }
  const SturmSequence seq(p);
  const int v_lo = lo ? seq.variations_at(*lo) : seq.variations_at_infinity(true);
  const int v_hi = hi ? seq.variations_at(*hi) : seq.variations_at_infinity(false);
  return v_lo - v_hi;
}

RealRootReport is_real_rooted(const PolyD& p) {
  if (p.is_zero()) throw DomainError("real-rootedness of the zero polynomial is undefined");
  RealRootReport report;
  report.degree = p.degree();

  std::size_t zeros = 0;
  while (p.coefficients()[zeros].is_zero()) ++zeros;
  const PolyD rest(std::vector<Rational>(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                                         p.coefficients().end()));

  int real = static_cast<int>(zeros);
  int positive = 0;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(rest)) {
    real += multiplicity * sturm_count(factor, std::nullopt, std::nullopt);
    // factor(0) != 0 after stripping t^k, so (0, inf) counts positive roots.
    positive += multiplicity * sturm_count(factor, Rational(0), std::nullopt);
  }
  report.real_roots_with_multiplicity = real;
  report.positive_roots_with_multiplicity = positive;
  report.is_real_rooted = real == report.degree;
  report.all_real_roots_nonpositive = positive == 0;
  return report;
}

RationalSeries segre_power(const RationalSeries& s, long r) {
  if (r < 1) throw DomainError("Segre power r must be >= 1, got " + std::to_string(r));
  RationalSeries acc = s;
  for (long k = 2; k <= r; ++k) acc = segre_direct(acc, s);
  return acc;
}

ConjectureTrace find_min_r(const RationalSeries& s, long r_max, const ExploreOptions& options) {
  if (r_max < 1) throw DomainError("r_max must be >= 1, got " + std::to_string(r_max));
  for (std::size_t i = 0; i < s.h().size(); ++i) {
    if (s.h()[i].sign() < 0) {
      throw DomainError("h_" + std::to_string(i) + " = " + s.h()[i].str() +
                        " is negative; the exploration requires a nonnegative h-vector");
    }
  }
  if (s.is_zero()) throw DomainError("the zero series has no h-polynomial to test");

  ConjectureTrace trace;
  trace.input = s;
  trace.r_max = r_max;
  RationalSeries power = s;
  bool seen_real_rooted = false;
  for (long r = 1; r <= r_max; ++r) {
    if (r > 1) power = segre_direct(power, s);
    TraceRecord rec;
    rec.r = r;
    rec.h = power.h();
    for (const auto& c : rec.h) rec.max_bits = std::max(rec.max_bits, c.bit_size());
    if (rec.max_bits > options.max_bits) {
      throw BudgetExceeded("coefficient of bit size " + std::to_string(rec.max_bits) +
                           " at r = " + std::to_string(r) + " exceeds the budget of " +
                           std::to_string(options.max_bits) + " bits");
    }
    rec.report = is_real_rooted(power.h_polynomial());
    if (rec.report.is_real_rooted) {
      if (!trace.min_r) trace.min_r = r;
      seen_real_rooted = true;
    } else if (seen_real_rooted) {
      trace.non_monotone = true;
    }
    if (options.on_record) options.on_record(rec);
    trace.records.push_back(std::move(rec));
    if (options.early_stop && trace.min_r) break;
  }
  return trace;
}

}  // namespace segre
