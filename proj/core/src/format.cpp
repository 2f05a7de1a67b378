#include "segrekit/format.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace segre {

namespace {

constexpr long kRootWindow = 64;

std::string power_of(std::string_view var, std::size_t k) {
  std::string out(var);
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

// "+(1/2)*d^2", "-d", "+10"; the leading '+' is stripped by the caller.
std::string signed_term(const Rational& c, std::string_view var, std::size_t k) {
  const bool negative = c.sign() < 0;
  const Rational mag = abs(c);
  std::string body;
  if (k == 0) {
    body = mag.str();
  } else if (mag.is_one()) {
    body = power_of(var, k);
  } else if (mag.is_integer()) {
    body = mag.str() + "*" + power_of(var, k);
  } else {
    body = "(" + mag.str() + ")*" + power_of(var, k);
  }
  return (negative ? "-" : "+") + body;
}

std::string strip_plus(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  return s;
}

// No '+' or '-' outside parentheses after the first character.
bool is_single_term(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] != '^') return false;
  }
  return true;
}

std::string wrap(const std::string& s) { return is_single_term(s) ? s : "(" + s + ")"; }

}  // namespace

std::string to_string(const PolyD& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    out += signed_term(c[k], var, k);
  }
  return strip_plus(out);
}

std::string to_string(const FracD& f) {
  if (f.is_polynomial()) return to_string(f.num(), "d");
  const std::string num = to_string(f.num(), "d");
  const std::string den = to_string(f.den(), "d");
  // The denominator is monic, so a bare "d" needs no parentheses.
  return wrap(num) + "/" + (den.find_first_of("*^+-") == std::string::npos ? den : "(" + den + ")");
}

std::string to_string(const PolyT& q) {
  if (q.is_zero()) return "0";
  std::string out;
  const auto& c = q.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const FracD& coeff = c[k];
    const bool simple = coeff.is_polynomial() && coeff.num().degree() == 0;
    if (simple) {
      out += signed_term(coeff.num().leading(), "t", k);
      continue;
    }
    const std::string body = to_string(coeff);
    if (k == 0) {
      out += (body.front() == '-' ? "" : "+") + body;
      continue;
    }
    const std::string factor = is_single_term(body) ? body : "(" + body + ")";
    out += (factor.front() == '-' ? "" : "+") + factor + "*" + power_of("t", k);
  }
  return strip_plus(out);
}

std::string to_factored_string(const PolyD& p, std::string_view var) {
  if (p.degree() < 1) return to_string(p, var);
  // Peel off (var + k) factors for integer roots -k within the window.
  PolyD rest = p;
  std::map<long, int> roots;  // k -> multiplicity of (var + k)
  for (long k = -kRootWindow; k <= kRootWindow && rest.degree() > 0; ++k) {
    const PolyD factor(std::vector<Rational>{Rational(k), Rational(1)});
    while (rest.degree() > 0 && evaluate(rest, Rational(-k)).is_zero()) {
      rest = exact_divide(rest, factor);
      ++roots[k];
    }
  }
  if (rest.degree() != 0) return to_string(p, var);
  const Rational c = rest.leading();
  std::vector<std::string> factors;
  for (const auto& [k, mult] : roots) {
    std::string f = std::string(var);
    if (k > 0) f += "+" + std::to_string(k);
    if (k < 0) f += std::to_string(k);
    if (k != 0) f = "(" + f + ")";
    if (mult > 1) {
      if (k == 0) f = "(" + f + ")";
      f += "^" + std::to_string(mult);
    }
    factors.push_back(f);
  }
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
  if (factors.size() == 1 && roots.begin()->second == 1 && c.is_one()) return to_string(p, var);
  if (c.is_one()) return body;
  if (c == Rational(-1)) return "-" + body;
  const Rational mag = abs(c);
  const std::string scalar = mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
  return (c.sign() < 0 ? "-" : "") + scalar + "*" + body;
}

}  // namespace segre
