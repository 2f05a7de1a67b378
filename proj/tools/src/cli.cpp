#include "segrekit_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "segrekit/segrekit.hpp"

namespace segre::cli {

namespace {

enum class Format { pretty, json, csv };

// Bad flag combinations detected after parsing; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

long parse_long(const std::string& token) {
  long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw DomainError("malformed integer '" + token + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RationalSeries load_series(const std::string& path) {
  try {
    return series_from_json(parse_json(read_file(path)));
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::vector<std::string> strs(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// Right-aligned grid of preformatted cells.
void emit_grid(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  for (const auto& row : cells) {
    out << "[";
    for (const auto& c : row) out << ' ' << std::setw(static_cast<int>(width)) << c;
    out << " ]\n";
  }
}

template <class S, class F>
void emit_matrix(std::ostream& out, Format fmt, const Matrix<S>& m, F&& cell) {
  if (fmt == Format::json) {
    emit_json(out, to_json(m));
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cell(m(i, j)));
    cells.push_back(std::move(row));
  }
  if (fmt == Format::pretty) {
    emit_grid(out, cells);
    return;
  }
  for (const auto& row : cells) {
    std::vector<std::string> quoted;
    for (const auto& c : row) quoted.push_back(csv_field(c));
    out << join(quoted, ",") << '\n';
  }
}

void emit_series(std::ostream& out, Format fmt, const RationalSeries& s) {
  switch (fmt) {
    case Format::json:
      emit_json(out, to_json(s));
      break;
    case Format::pretty:
      out << "h = [" << join(strs(s.h()), ", ") << "]\n" << "d = " << s.d() << '\n';
      break;
    case Format::csv:
      out << "d,i,h\n";
      for (std::size_t i = 0; i < s.h().size(); ++i) out << s.d() << ',' << i << ',' << s.h()[i].str() << '\n';
      break;
  }
}

std::string series_label(const RationalSeries& s) {
  return "h=[" + join(strs(s.h()), ", ") + "] d=" + std::to_string(s.d());
}

std::size_t max_bits_budget() {
  const char* env = std::getenv("SEGRE_KIT_MAX_BITS");
  if (env == nullptr || *env == '\0') return kDefaultMaxBits;
  const long value = parse_long(env);
  if (value < 1) throw DomainError("SEGRE_KIT_MAX_BITS must be positive, got '" + std::string(env) + "'");
  return static_cast<std::size_t>(value);
}

// --- subcommands -----------------------------------------------------------

struct SegreArgs {
  std::string a, b;
  std::string algo = "direct";
};

int cmd_segre(const SegreArgs& args, Format fmt, std::ostream& out, std::ostream& err) {
  const RationalSeries a = load_series(args.a), b = load_series(args.b);
  if (args.algo == "direct") {
    emit_series(out, fmt, segre_direct(a, b));
  } else if (args.algo == "closed") {
    emit_series(out, fmt, segre_closed_form(a, b));
  } else if (args.algo == "block") {
    emit_series(out, fmt, segre_blockwise(a, b));
  } else {
    const RationalSeries direct = segre_direct(a, b);
    const RationalSeries closed = segre_closed_form(a, b);
    const RationalSeries block = segre_blockwise(a, b);
    if (!(direct == closed && direct == block)) {
      err << "error: the three Segre algorithms disagree\n";
      for (std::size_t n = 0; n < direct.h().size(); ++n) {
        const Rational x = direct.h_at(static_cast<long>(n));
        const Rational y = closed.h_at(static_cast<long>(n));
        const Rational z = block.h_at(static_cast<long>(n));
        if (x == y && x == z) continue;
        err << "  h_" << n << ": direct=" << x << " closed=" << y << " block=" << z << '\n';
      }
      return kExitDomain;
    }
    emit_series(out, fmt, direct);
  }
  return kExitOk;
}

int cmd_hvec(const std::string& seq, long d, Format fmt, std::ostream& out) {
  std::vector<Rational> a;
  for (const auto& token : split(seq, ',')) a.push_back(Rational::parse(trim(token)));
  emit_series(out, fmt, RationalSeries(h_from_sequence(a, d), d));
  return kExitOk;
}

int cmd_expand(const std::string& path, long n, Format fmt, std::ostream& out) {
  if (n < 0) throw DomainError("--n must be >= 0, got " + std::to_string(n));
  const auto terms = expand(load_series(path), n);
  switch (fmt) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& x : terms) arr.push_back(to_json(x));
      emit_json(out, arr);
      break;
    }
    case Format::pretty:
      for (std::size_t i = 0; i < terms.size(); ++i) out << "a_" << i << " = " << terms[i] << '\n';
      break;
    case Format::csv:
      out << "n,a\n";
      for (std::size_t i = 0; i < terms.size(); ++i) out << i << ',' << terms[i] << '\n';
      break;
  }
  return kExitOk;
}

struct MatrixArgs {
  std::string family;
  long da = 0;
  std::optional<long> db;
  long t = 0;
  bool symbolic = false;
};

int cmd_matrix(const MatrixArgs& args, Format fmt, std::ostream& out) {
  const auto rational_cell = [](const Rational& x) { return x.str(); };
  const auto symbolic_cell = [](const PolyT& x) { return to_string(x); };
  const std::string& f = args.family;
  const bool inherently_symbolic = f == "w" || f == "a" || f == "x";

  if (args.symbolic && (f == "mprime" || f == "v" || f == "vinv")) {
    throw UsageError("--symbolic is not available for --family " + f);
  }
  if (f == "mprime" || (f == "msub" && !args.symbolic)) {
    if (!args.db) throw UsageError("--family " + f + " needs --db");
  }

  if (f == "mprime") {
    emit_matrix(out, fmt, mprime(args.da, *args.db), rational_cell);
  } else if (f == "msub") {
    if (args.symbolic) {
      emit_matrix(out, fmt, msub_symbolic(args.da), symbolic_cell);
    } else {
      emit_matrix(out, fmt, msub(args.da, *args.db, args.t), rational_cell);
    }
  } else if (f == "v") {
    emit_matrix(out, fmt, v_matrix(args.da), rational_cell);
  } else if (f == "vinv") {
    emit_matrix(out, fmt, v_inverse(args.da), rational_cell);
  } else if (inherently_symbolic) {
    const SymbolicMatrix m = f == "w" ? w_matrix(args.da) : f == "a" ? a_matrix(args.da) : x_matrix(args.da);
    if (args.symbolic || !args.db) {
      emit_matrix(out, fmt, m, symbolic_cell);
    } else {
      emit_matrix(out, fmt, evaluate(m, Rational(*args.db), Rational(args.t)), rational_cell);
    }
  }
  return kExitOk;
}

int cmd_spectrum(long da, const std::string& factors, Format fmt, std::ostream& out) {
  if (trim(factors) == "d") {
    const auto eigenvalues = spectrum(da);
    switch (fmt) {
      case Format::json: {
        Json arr = Json::array();
        for (const auto& e : eigenvalues) {
          Json item;
          item["i"] = e.i;
          item["lambda"] = to_json(e.value);
          arr.push_back(std::move(item));
        }
        Json doc;
        doc["da"] = da;
        doc["eigenvalues"] = std::move(arr);
        emit_json(out, doc);
        break;
      }
      case Format::pretty:
        for (const auto& e : eigenvalues) {
          out << "lambda_" << da << "(d, " << e.i << ") = " << to_factored_string(e.value) << '\n';
        }
        break;
      case Format::csv:
        out << "i,lambda\n";
        for (const auto& e : eigenvalues) out << e.i << ',' << csv_field(to_factored_string(e.value)) << '\n';
        break;
    }
    return kExitOk;
  }

  std::vector<std::pair<long, long>> params;
  for (const auto& group : split(factors, ';')) {
    const auto pair = split(group, ',');
    if (pair.size() != 2) throw DomainError("malformed factor '" + group + "', expected d,t");
    params.emplace_back(parse_long(trim(pair[0])), parse_long(trim(pair[1])));
  }
  const ProductSpectrumReport r = verify_product_spectrum(da, params);
  switch (fmt) {
    case Format::json:
      emit_json(out, to_json(r));
      break;
    case Format::pretty:
      for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) out << "mu_" << i << " = " << r.eigenvalues[i] << '\n';
      out << "charpoly = " << to_string(r.charpoly, "x") << '\n';
      out << "predicted spectrum " << (r.passed ? "matches" : "DOES NOT match") << '\n';
      break;
    case Format::csv:
      out << "i,eigenvalue\n";
      for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) out << i << ',' << r.eigenvalues[i] << '\n';
      break;
  }
  return r.passed ? kExitOk : kExitDomain;
}

int cmd_eigvec(long da, long i, Format fmt, std::ostream& out) {
  const EigenReport r = eigen_report(da, i);
  switch (fmt) {
    case Format::json:
      emit_json(out, to_json(r));
      break;
    case Format::pretty:
      out << "lambda = " << to_factored_string(r.lambda.value) << '\n';
      for (std::size_t k = 0; k < r.a.entries.size(); ++k) out << "a_" << k << " = " << to_string(r.a.entries[k]) << '\n';
      for (std::size_t k = 0; k < r.b.entries.size(); ++k) out << "b_" << k << " = " << to_string(r.b.entries[k]) << '\n';
      out << "A*a == lambda*a: " << (r.eigen_eq_a ? "yes" : "no") << '\n';
      out << "M*b == lambda*b: " << (r.eigen_eq_m ? "yes" : "no") << '\n';
      break;
    case Format::csv:
      out << "k,a,b\n";
      for (std::size_t k = 0; k < r.a.entries.size(); ++k) {
        out << k << ',' << csv_field(to_string(r.a.entries[k])) << ',' << csv_field(to_string(r.b.entries[k])) << '\n';
      }
      break;
  }
  return r.eigen_eq_a && r.eigen_eq_m ? kExitOk : kExitDomain;
}

struct VerifyArgs {
  long da = 0;
  std::optional<long> db;
  long sweeps = 50;
  unsigned long seed = 7;
};

int cmd_verify(const VerifyArgs& args, Format fmt, std::ostream& out) {
  if (args.sweeps < 0) throw DomainError("--sweeps must be >= 0, got " + std::to_string(args.sweeps));
  const long db = args.db.value_or(args.da + 1);
  const StructureReport structure = verify_structure(args.da, db);

  std::vector<EigenReport> eigen;
  for (long i = 0; i < args.da; ++i) eigen.push_back(eigen_report(args.da, i));

  std::mt19937_64 rng(args.seed);
  std::uniform_int_distribution<long> n_dist(1, 3), d_dist(1, 9), t_dist(0, 4);
  std::vector<ProductSpectrumReport> failures;
  for (long s = 0; s < args.sweeps; ++s) {
    std::vector<std::pair<long, long>> params;
    for (long k = 0, n = n_dist(rng); k < n; ++k) params.emplace_back(d_dist(rng), t_dist(rng));
    ProductSpectrumReport r = verify_product_spectrum(args.da, params);
    if (!r.passed) failures.push_back(std::move(r));
  }

  bool all = structure.all_passed() && failures.empty();
  for (const auto& e : eigen) all = all && e.eigen_eq_a && e.eigen_eq_m;

  switch (fmt) {
    case Format::json: {
      Json eig = Json::array();
      for (const auto& e : eigen) {
        Json item;
        item["i"] = e.lambda.i;
        item["eigen_eq_A"] = e.eigen_eq_a;
        item["eigen_eq_M"] = e.eigen_eq_m;
        eig.push_back(std::move(item));
      }
      Json fails = Json::array();
      for (const auto& f : failures) fails.push_back(to_json(f));
      Json prod;
      prod["sweeps"] = args.sweeps;
      prod["seed"] = args.seed;
      prod["failures"] = std::move(fails);
      Json doc;
      doc["structure"] = to_json(structure);
      doc["eigen"] = std::move(eig);
      doc["product_spectrum"] = std::move(prod);
      doc["all_passed"] = all;
      emit_json(out, doc);
      break;
    }
    case Format::pretty:
      for (const auto& c : structure.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (c.first_failure) out << "  " << *c.first_failure;
        out << '\n';
      }
      for (const auto& e : eigen) {
        out << (e.eigen_eq_a && e.eigen_eq_m ? "PASS " : "FAIL ") << "eigenvectors for i = " << e.lambda.i << '\n';
      }
      out << (failures.empty() ? "PASS " : "FAIL ") << "product spectrum, " << args.sweeps
          << " random parameter lists (seed " << args.seed << ")\n";
      break;
    case Format::csv:
      out << "check,passed\n";
      for (const auto& c : structure.checks) out << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << '\n';
      for (const auto& e : eigen) {
        out << "eigen i=" << e.lambda.i << ',' << (e.eigen_eq_a && e.eigen_eq_m ? "true" : "false") << '\n';
      }
      out << "product spectrum," << (failures.empty() ? "true" : "false") << '\n';
      break;
  }
  return all ? kExitOk : kExitDomain;
}

void emit_trace_table(std::ostream& out, const ConjectureTrace& t) {
  out << "input: " << series_label(t.input) << '\n';
  out << std::setw(4) << "r" << std::setw(8) << "degree" << std::setw(13) << "real_rooted" << std::setw(13)
      << "nonpositive" << std::setw(12) << "real_roots" << std::setw(10) << "max_bits" << '\n';
  for (const auto& rec : t.records) {
    out << std::setw(4) << rec.r << std::setw(8) << rec.report.degree << std::setw(13)
        << (rec.report.is_real_rooted ? "yes" : "no") << std::setw(13)
        << (rec.report.all_real_roots_nonpositive ? "yes" : "no") << std::setw(12)
        << rec.report.real_roots_with_multiplicity << std::setw(10) << rec.max_bits << '\n';
  }
  out << "min_R: " << (t.min_r ? std::to_string(*t.min_r) : "none up to " + std::to_string(t.r_max)) << '\n';
  if (t.non_monotone) out << "note: real-rootedness was lost again after min_R\n";
}

struct ConjectureArgs {
  std::vector<std::string> files;
  long r_max = 8;
  bool early_stop = false;
};

int cmd_conjecture(const ConjectureArgs& args, Format fmt, std::ostream& out, std::ostream& err) {
  ExploreOptions options;
  options.early_stop = args.early_stop;
  options.max_bits = max_bits_budget();
  std::vector<ConjectureTrace> traces;
  for (const auto& path : args.files) {
    const RationalSeries s = load_series(path);
    options.on_record = [&](const TraceRecord& rec) {
      err << path << ": r=" << rec.r << " degree=" << rec.report.degree << " max_bits=" << rec.max_bits
          << " real_rooted=" << (rec.report.is_real_rooted ? "yes" : "no") << '\n';
    };
    traces.push_back(find_min_r(s, args.r_max, options));
  }
  switch (fmt) {
    case Format::json:
      if (traces.size() == 1) {
        emit_json(out, to_json(traces.front()));
      } else {
        Json arr = Json::array();
        for (const auto& t : traces) arr.push_back(to_json(t));
        emit_json(out, arr);
      }
      break;
    case Format::pretty:
      for (std::size_t k = 0; k < traces.size(); ++k) {
        if (k) out << '\n';
        emit_trace_table(out, traces[k]);
      }
      break;
    case Format::csv:
      out << "input," << trace_csv_header() << '\n';
      for (std::size_t k = 0; k < traces.size(); ++k) {
        std::istringstream rows(to_csv_rows(traces[k]));
        for (std::string line; std::getline(rows, line);) out << csv_field(args.files[k]) << ',' << line << '\n';
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Segre products of rational series, transformation matrices and their spectra",
               "segre-kit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "pretty";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));

  SegreArgs segre_args;
  auto* segre_cmd = app.add_subcommand("segre", "Segre product of two series");
  segre_cmd->add_option("A", segre_args.a, "First series (JSON file)")->required();
  segre_cmd->add_option("B", segre_args.b, "Second series (JSON file)")->required();
  segre_cmd->add_option("--algo", segre_args.algo, "direct, closed, block or all")
      ->check(CLI::IsMember({"direct", "closed", "block", "all"}));

  std::string seq;
  long hvec_d = 0;
  auto* hvec_cmd = app.add_subcommand("hvec", "h-vector of a coefficient sequence");
  hvec_cmd->add_option("--seq", seq, "Comma-separated terms a_0,a_1,...")->required();
  hvec_cmd->add_option("--d", hvec_d, "Denominator exponent")->required();

  std::string expand_path;
  long expand_n = 10;
  auto* expand_cmd = app.add_subcommand("expand", "Leading coefficients of a series");
  expand_cmd->add_option("A", expand_path, "Series (JSON file)")->required();
  expand_cmd->add_option("--n", expand_n, "Number of terms");

  MatrixArgs matrix_args;
  auto* matrix_cmd = app.add_subcommand("matrix", "Transformation matrices");
  matrix_cmd->add_option("--family", matrix_args.family, "mprime, msub, v, vinv, w, a or x")
      ->required()
      ->check(CLI::IsMember({"mprime", "msub", "v", "vinv", "w", "a", "x"}));
  matrix_cmd->add_option("--da", matrix_args.da, "Size parameter")->required();
  matrix_cmd->add_option("--db", matrix_args.db, "Second dimension, or the value of d");
  matrix_cmd->add_option("--t", matrix_args.t, "Block offset / value of t");
  matrix_cmd->add_flag("--symbolic", matrix_args.symbolic, "Entries over Q(d)[t]");

  long spectrum_da = 0;
  std::string factors = "d";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of products of M matrices");
  spectrum_cmd->add_option("--da", spectrum_da, "Matrix size")->required();
  spectrum_cmd->add_option("--factors", factors, "\"d\" for symbolic, or \"d1,t1;d2,t2;...\"");

  long eig_da = 0, eig_i = 0;
  auto* eigvec_cmd = app.add_subcommand("eigvec", "Eigenvectors of A and M");
  eigvec_cmd->add_option("--da", eig_da, "Matrix size")->required();
  eigvec_cmd->add_option("--i", eig_i, "Eigenvalue index")->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check the matrix identities and spectra");
  verify_cmd->add_option("--da", verify_args.da, "Matrix size")->required();
  verify_cmd->add_option("--db", verify_args.db, "Second dimension for the rotation check");
  verify_cmd->add_option("--sweeps", verify_args.sweeps, "Random product-spectrum instances");
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed");

  ConjectureArgs conj_args;
  auto* conj_cmd = app.add_subcommand("conjecture", "Real-rootedness of iterated Segre powers");
  conj_cmd->add_option("A", conj_args.files, "Series (JSON files)")->required();
  conj_cmd->add_option("--rmax", conj_args.r_max, "Largest power");
  conj_cmd->add_flag("--early-stop", conj_args.early_stop, "Stop at the first real-rooted power");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("segre-kit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::pretty;

  try {
    if (*segre_cmd) return cmd_segre(segre_args, fmt, out, err);
    if (*hvec_cmd) return cmd_hvec(seq, hvec_d, fmt, out);
    if (*expand_cmd) return cmd_expand(expand_path, expand_n, fmt, out);
    if (*matrix_cmd) return cmd_matrix(matrix_args, fmt, out);
    if (*spectrum_cmd) return cmd_spectrum(spectrum_da, factors, fmt, out);
    if (*eigvec_cmd) return cmd_eigvec(eig_da, eig_i, fmt, out);
    if (*verify_cmd) return cmd_verify(verify_args, fmt, out);
    if (*conj_cmd) return cmd_conjecture(conj_args, fmt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace segre::cli
