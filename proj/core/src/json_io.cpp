#include "segrekit/json_io.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "segrekit/error.hpp"

namespace segre {

namespace {

Json rationals_to_json(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

std::vector<Rational> rationals_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be a JSON array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(rows);
  return out;
}

Json polyt_vector(const std::vector<PolyT>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("expected a rational string, got " + j.dump());
}

Json to_json(const RationalSeries& s) {
  Json out;
  out["h"] = rationals_to_json(s.h());
  out["d"] = s.d();
  return out;
}

RationalSeries series_from_json(const Json& j) {
  const Json& d = require_key(j, "d");
  if (!d.is_number_integer()) throw DomainError("\"d\" must be an integer, got " + d.dump());
  return RationalSeries(rationals_from_json(require_key(j, "h"), "\"h\""), d.get<long>());
}

Json to_json(const PolyD& p) { return rationals_to_json(p.coefficients()); }

PolyD polyd_from_json(const Json& j) { return PolyD(rationals_from_json(j, "polynomial")); }

Json to_json(const FracD& f) {
  Json out;
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den());
  return out;
}

FracD fracd_from_json(const Json& j) {
  return FracD(polyd_from_json(require_key(j, "num")), polyd_from_json(require_key(j, "den")));
}

Json to_json(const PolyT& q) {
  Json arr = Json::array();
  for (const auto& c : q.coefficients()) arr.push_back(to_json(c));
  return arr;
}

PolyT polyt_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("symbolic polynomial must be a JSON array");
  std::vector<FracD> coeffs;
  for (const auto& c : j) coeffs.push_back(fracd_from_json(c));
  return PolyT(std::move(coeffs));
}

Json to_json(const RationalMatrix& m) { return matrix_json(m); }
Json to_json(const SymbolicMatrix& m) { return matrix_json(m); }

Json to_json(const StructureReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["first_failure"] = c.first_failure ? Json(*c.first_failure) : Json(nullptr);
    checks.push_back(std::move(item));
  }
  Json out;
  out["da"] = r.da;
  out["db"] = r.db;
  out["checks"] = std::move(checks);
  out["all_passed"] = r.all_passed();
  return out;
}

Json to_json(const ProductSpectrumReport& r) {
  Json params = Json::array();
  for (const auto& [d, t] : r.params) params.push_back(Json::array({d, t}));
  Json out;
  out["da"] = r.da;
  out["factors"] = std::move(params);
  out["eigenvalues"] = rationals_to_json(r.eigenvalues);
  out["charpoly"] = to_json(r.charpoly);
  out["expected"] = to_json(r.expected);
  out["passed"] = r.passed;
  return out;
}

Json to_json(const EigenReport& r) {
  Json out;
  out["da"] = r.lambda.da;
  out["i"] = r.lambda.i;
  out["lambda"] = to_json(r.lambda.value);
  out["a"] = polyt_vector(r.a.entries);
  out["b"] = polyt_vector(r.b.entries);
  Json checks;
  checks["eigen_eq_A"] = r.eigen_eq_a;
  checks["eigen_eq_M"] = r.eigen_eq_m;
  out["checks"] = std::move(checks);
  return out;
}

Json to_json(const CoincidenceReport& r) {
  Json stated = Json::array();
  for (const auto& s : r.stated) {
    Json item;
    item["d"] = s.d;
    item["partner"] = s.partner;
    item["condition_holds"] = s.condition_holds;
    item["partner_in_range"] = s.partner_in_range;
    item["values_equal"] = s.values_equal ? Json(*s.values_equal) : Json(nullptr);
    stated.push_back(std::move(item));
  }
  Json observed = Json::array();
  for (const auto& c : r.observed) {
    Json item;
    item["d"] = c.d;
    item["i"] = c.i;
    item["partner"] = c.partner;
    item["value"] = to_json(c.value);
    observed.push_back(std::move(item));
  }
  Json out;
  out["da"] = r.da;
  out["i"] = r.i;
  out["stated"] = std::move(stated);
  out["observed"] = std::move(observed);
  return out;
}

Json to_json(const RealRootReport& r) {
  Json out;
  out["degree"] = r.degree;
  out["real_roots"] = r.real_roots_with_multiplicity;
  out["positive_roots"] = r.positive_roots_with_multiplicity;
  out["real_rooted"] = r.is_real_rooted;
  out["nonpositive"] = r.all_real_roots_nonpositive;
  return out;
}

Json to_json(const ConjectureTrace& t) {
  Json records = Json::array();
  for (const auto& rec : t.records) {
    Json item;
    item["r"] = rec.r;
    item["h"] = rationals_to_json(rec.h);
    item["degree"] = rec.report.degree;
    item["real_rooted"] = rec.report.is_real_rooted;
    item["nonpositive"] = rec.report.all_real_roots_nonpositive;
    item["real_roots"] = rec.report.real_roots_with_multiplicity;
    item["positive_roots"] = rec.report.positive_roots_with_multiplicity;
    item["max_bits"] = rec.max_bits;
    records.push_back(std::move(item));
  }
  Json out;
  out["input"] = to_json(t.input);
  out["r_max"] = t.r_max;
  out["records"] = std::move(records);
  out["min_R"] = t.min_r ? Json(*t.min_r) : Json(nullptr);
  out["non_monotone"] = t.non_monotone;
  return out;
}

std::string trace_csv_header() {
  return "r,degree,real_rooted,nonpositive,real_roots,positive_roots,max_bits,h";
}

std::string to_csv_rows(const ConjectureTrace& t) {
  std::ostringstream os;
  for (const auto& rec : t.records) {
    os << rec.r << ',' << rec.report.degree << ',' << (rec.report.is_real_rooted ? "true" : "false")
       << ',' << (rec.report.all_real_roots_nonpositive ? "true" : "false") << ','
       << rec.report.real_roots_with_multiplicity << ',' << rec.report.positive_roots_with_multiplicity
       << ',' << rec.max_bits << ',';
    // h entries joined by ';' so the row stays one CSV field.
    for (std::size_t i = 0; i < rec.h.size(); ++i) os << (i ? ";" : "") << rec.h[i].str();
    os << '\n';
  }
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace segre
