#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "segrekit/conjecture.hpp"
#include "segrekit/matrices.hpp"
#include "segrekit/series.hpp"
#include "segrekit/spectra.hpp"

namespace segre {

// Insertion-ordered so emitted documents keep the documented key order and
// re-emitting a parsed document reproduces the same bytes.
using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" or integer strings. Integral JSON numbers are
/// accepted on input; anything else throws DomainError.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// {"h": ["1","6","1"], "d": 3}
Json to_json(const RationalSeries& s);
RationalSeries series_from_json(const Json& j);

/// Coefficient list, lowest power first.
Json to_json(const PolyD& p);
PolyD polyd_from_json(const Json& j);

/// {"num": [...], "den": [...]} coefficient lists in d.
Json to_json(const FracD& f);
FracD fracd_from_json(const Json& j);

/// One FracD object per power of t, lowest first.
Json to_json(const PolyT& q);
PolyT polyt_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
Json to_json(const RationalMatrix& m);
Json to_json(const SymbolicMatrix& m);

Json to_json(const StructureReport& r);
Json to_json(const ProductSpectrumReport& r);
/// {"da", "i", "lambda", "a", "b", "checks": {"eigen_eq_A", "eigen_eq_M"}}
Json to_json(const EigenReport& r);
Json to_json(const CoincidenceReport& r);
Json to_json(const RealRootReport& r);
/// {"input", "r_max", "records": [{"r", "h", "degree", "real_rooted",
/// "nonpositive", "real_roots", "positive_roots", "max_bits"}, ...],
/// "min_R", "non_monotone"}
Json to_json(const ConjectureTrace& t);

/// One row per r: r,degree,real_rooted,nonpositive,real_roots,positive_roots,max_bits,h
std::string trace_csv_header();
std::string to_csv_rows(const ConjectureTrace& t);

/// Parses a JSON document, throwing DomainError with the parser message.
Json parse_json(const std::string& text);

}  // namespace segre
