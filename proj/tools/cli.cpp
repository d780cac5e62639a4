#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "stirling/bernoulli.hpp"
#include "stirling/bounds.hpp"
#include "stirling/constants.hpp"
#include "stirling/errors.hpp"
#include "stirling/expansions.hpp"
#include "stirling/oracle.hpp"
#include "stirling/report.hpp"
#include "stirling/series.hpp"

namespace stirling::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One output document. CSV prints the table; JSON prints meta plus the rows,
// or meta merged with the single row when flat.
struct Document {
  json meta = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  bool flat = false;
};

std::string csv_field(const json& v) {
  std::string s;
  if (v.is_null()) return s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string render(const Document& doc, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << doc.columns[i];
    os << '\n';
    for (const auto& row : doc.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << '\n';
    }
    return os.str();
  }
  json out = doc.meta;
  if (doc.flat) {
    for (std::size_t i = 0; i < doc.columns.size() && !doc.rows.empty(); ++i) out[doc.columns[i]] = doc.rows[0][i];
  } else {
    json rows = json::array();
    for (const auto& row : doc.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < doc.columns.size(); ++i) obj[doc.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    out["rows"] = std::move(rows);
  }
  return out.dump(2) + "\n";
}

long parse_integer(const std::string& text, const char* flag) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(std::string(flag) + " expects an integer, got '" + text + "'");
  return value;
}

struct Globals {
  long precision_bits = PrecisionCtx::kDefaultBits;
  std::string format = "csv";
  int digits = 20;
  std::string output;
};

struct Options {
  int bernoulli_max = 0;

  std::string z;
  std::optional<int> terms;
  bool automatic = false;

  int constants_max_n = 12;

  std::string family = "all";
  long bounds_n_max = 100;
  std::optional<long> bounds_n_min;
  int impens_orders = 6;

  std::string which;
  std::string expansion_n = "10";
  long k_max = 10;

  std::string oracle_z;
  std::string method = "binet2";
  long oracle_terms = 10000;

  long report_n_max = 100;
};

Document bernoulli_doc(const Options& o) {
  if (o.bernoulli_max < 0) throw UsageError("--max must be non-negative");
  BernoulliTable table = bernoulli_table(o.bernoulli_max);
  Document doc;
  doc.meta["max"] = o.bernoulli_max;
  doc.columns = {"k", "B_k", "a_k"};
  for (int k = 0; k <= o.bernoulli_max; ++k) {
    doc.rows.push_back({k, table.b[k].to_string(), table.a[k].to_string()});
  }
  return doc;
}

Document eval_doc(const Options& o, const Globals& g, const PrecisionCtx& ctx) {
  if (o.terms.has_value() == o.automatic) throw UsageError("eval needs exactly one of --terms or --auto");
  BigFloat z = BigFloat::from_decimal(o.z, ctx);
  Approximation a = o.automatic ? optimal_truncation(z, ctx) : lngamma_stirling(z, *o.terms, ctx);
  Document doc;
  doc.flat = true;
  doc.meta["z"] = o.z;
  doc.columns = {"value_hex", "value_dec", "order_used", "omitted_term_dec", "precision_bits"};
  doc.rows.push_back({a.value.to_hex(), a.value.to_decimal(g.digits), a.order_used,
                      a.omitted_term.to_decimal(g.digits), a.ctx_bits});
  return doc;
}

Document constants_doc(const Options& o, const Globals& g, const PrecisionCtx& ctx) {
  if (o.constants_max_n < 1) throw UsageError("--max-n must be at least 1");
  ConstantSequence seq = c_sequence(o.constants_max_n, ctx);
  Document doc;
  doc.meta["half_ln_2pi"] = seq.reference.to_decimal(g.digits);
  if (seq.entries.size() >= 2) {
    ConstantEstimate best = best_constant_estimate(seq);
    doc.meta["best_estimate"] = json{{"N", best.n_best}, {"value", best.estimate.to_decimal(g.digits)}};
  }
  doc.columns = {"N", "C_N_exact", "C_N_decimal", "abs_gap_to_half_ln_2pi"};
  for (const auto& e : seq.entries) {
    doc.rows.push_back({e.n, e.exact.to_string(), e.decimal.to_decimal(g.digits),
                        abs(e.decimal - seq.reference).to_decimal(g.digits)});
  }
  return doc;
}

std::string holds_text(const BoundReport& r) {
  switch (r.verdict) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "";
}

void append_bound_rows(Document& doc, const std::vector<BoundReport>& reports, int digits) {
  auto opt = [&](const std::optional<BigFloat>& x) { return x ? json(x->to_decimal(digits)) : json(); };
  for (const auto& r : reports) {
    json n = r.family == BoundFamily::impens ? json(r.label) : json(r.n);
    doc.rows.push_back({std::string(to_string(r.family)), n, opt(r.lhs), r.mid.to_decimal(digits), opt(r.rhs),
                        r.margin.to_decimal(digits), holds_text(r)});
  }
}

Document bounds_doc(const Options& o, const Globals& g, const PrecisionCtx& ctx) {
  Document doc;
  doc.meta["family"] = o.family;
  doc.meta["n_max"] = o.bounds_n_max;
  doc.columns = {"family", "n", "lhs", "mid", "rhs", "margin", "holds"};
  if (o.impens_orders < 0) throw UsageError("--orders must be non-negative");

  if (o.family == "all") {
    // Survey mode: every family over its own range; undecidable rows are reported.
    for (BoundFamily f : {BoundFamily::robbins, BoundFamily::maria, BoundFamily::hummel, BoundFamily::nanjundiah,
                          BoundFamily::michel}) {
      long from = std::max(o.bounds_n_min.value_or(1), min_valid_n(f));
      if (from > o.bounds_n_max) continue;
      append_bound_rows(doc, survey_bound(f, from, o.bounds_n_max, ctx), g.digits);
    }
    append_bound_rows(doc, survey_impens(impens_grid_points(), o.impens_orders, ctx), g.digits);
    return doc;
  }

  BoundFamily family = *parse_bound_family(o.family);
  if (family == BoundFamily::impens) {
    auto reports = survey_impens(impens_grid_points(), o.impens_orders, ctx);
    for (const auto& r : reports) {
      if (r.verdict == Verdict::inconclusive) {
        throw InconclusiveError("impens at " + r.label + ": margin within the oracle error bound " +
                                r.error_bound.to_decimal(6));
      }
    }
    append_bound_rows(doc, reports, g.digits);
    return doc;
  }
  long from = o.bounds_n_min.value_or(min_valid_n(family));
  if (o.bounds_n_max < min_valid_n(family)) {
    throw ValidityError(o.family + " inequality is stated for n >= " + std::to_string(min_valid_n(family)) +
                        ", but --n-max is " + std::to_string(o.bounds_n_max));
  }
  append_bound_rows(doc, check_bound_range(family, from, o.bounds_n_max, ctx), g.digits);
  return doc;
}

Document expansions_doc(const Options& o, const Globals& g, const PrecisionCtx& ctx) {
  Document doc;
  doc.meta["which"] = o.which;
  const int d = g.digits;
  if (o.which == "namias") {
    IdentityResidual r = namias_residual(BigFloat::from_decimal(o.expansion_n, ctx), ctx);
    doc.flat = true;
    doc.columns = {"n", "residual", "error_bound"};
    doc.rows.push_back({o.expansion_n, r.residual.to_decimal(d), r.error_bound.to_decimal(d)});
    return doc;
  }

  const long n = parse_integer(o.expansion_n, "--n");
  doc.meta["n"] = n;
  doc.meta["k_max"] = o.k_max;
  if (o.which == "feller") {
    if (o.k_max < 1) throw UsageError("--k-max must be at least 1");
    doc.meta["identity_residual"] = feller_identity_residual(n, ctx).to_decimal(d);
    doc.meta["constant_partial_sum"] = feller_constant(o.k_max, ctx).to_decimal(d);
    doc.columns = {"k", "a_k", "b_k"};
    for (long k = 1; k <= o.k_max; ++k) {
      FellerTerm t = feller_term(k, ctx);
      doc.rows.push_back({k, t.a_k.to_decimal(d), t.b_k.to_decimal(d)});
    }
  } else if (o.which == "marsaglia") {
    if (o.k_max < 1 || o.k_max > kMaxMarsagliaOrder) {
      throw UsageError("--k-max must be in 1.." + std::to_string(kMaxMarsagliaOrder));
    }
    const auto order = static_cast<int>(o.k_max);
    BigFloat approx = marsaglia_factorial(n, order, ctx);
    BigFloat exact = exp(ln_factorial_exact(n, ctx.widened(32)).value, ctx.widened(32));
    doc.meta["factorial_approx"] = approx.to_decimal(d);
    doc.meta["relative_error"] = BigFloat(abs(approx / exact - 1), ctx).to_decimal(d);
    MarsagliaSeries series = marsaglia_coeffs(order);
    doc.columns = {"k", "b_k"};
    for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
      doc.rows.push_back({static_cast<long>(k), series.coeffs[k].to_string()});
    }
  } else {
    BigFloat log_product = mermin_log_partial_product(n, o.k_max, ctx);
    BigFloat r_n = sequence_point(n, ctx).r_n;
    doc.flat = true;
    doc.columns = {"log_partial_product", "r_n", "abs_gap"};
    doc.rows.push_back({log_product.to_decimal(d), r_n.to_decimal(d), abs(log_product - r_n).to_decimal(d)});
  }
  return doc;
}

Document oracle_doc(const Options& o, const Globals& g, const PrecisionCtx& ctx) {
  BigFloat z = BigFloat::from_decimal(o.oracle_z, ctx);
  OracleValue v = o.method == "binet2" ? lngamma_binet2(z, ctx)
                  : o.method == "euler" ? lngamma_euler_limit(z, o.oracle_terms, ctx)
                                        : weierstrass_inv_gamma(z, o.oracle_terms, ctx);
  Document doc;
  doc.flat = true;
  doc.meta["z"] = o.oracle_z;
  doc.columns = {"method", "quantity", "value_hex", "value_dec", "error_bound_dec", "precision_bits"};
  doc.rows.push_back({std::string(to_string(v.method)), o.method == "weierstrass" ? "inv_gamma" : "ln_gamma",
                      v.value.to_hex(), v.value.to_decimal(g.digits), v.error_bound.to_decimal(g.digits),
                      ctx.bits()});
  return doc;
}

Document report_doc(const Options& o, const Globals& g, const PrecisionCtx& ctx, bool& any_failed) {
  Report r = report_all(o.report_n_max, ctx, g.digits);
  Document doc;
  doc.meta["n_max"] = r.n_max;
  doc.meta["precision_bits"] = r.precision_bits;
  doc.meta["summary"] = json{{"pass", r.passed}, {"fail", r.failed}, {"inconclusive", r.inconclusive}};
  doc.columns = {"check", "params", "status", "value", "threshold", "detail"};
  for (const auto& row : r.rows) {
    doc.rows.push_back(
        {row.check, row.params, std::string(to_string(row.status)), row.value, row.threshold, row.detail});
  }
  any_failed = r.failed > 0;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stirling series, Bernoulli numbers and factorial inequalities at arbitrary precision", "stirling"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  Options o;
  app.add_option("--precision-bits", g.precision_bits, "Working precision in bits (>= 64)")
      ->envname("STIRLING_PRECISION_BITS")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--digits", g.digits, "Significant digits for decimals")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  app.add_option("--output", g.output, "Write the document to this path instead of stdout");

  auto* bern = app.add_subcommand("bernoulli", "Exact B_k and a_k = B_k/k!");
  bern->add_option("--max", o.bernoulli_max, "Largest index")->required();

  auto* eval = app.add_subcommand("eval", "ln Γ(z) from the Stirling series");
  eval->add_option("--z", o.z, "Argument, decimal or p/q")->required();
  auto* terms = eval->add_option("--terms", o.terms, "Number of correction terms");
  auto* automatic = eval->add_flag("--auto", o.automatic, "Truncate at the smallest term");
  terms->excludes(automatic);

  auto* cons = app.add_subcommand("constants", "The constant sequence C_N");
  cons->add_option("--max-n", o.constants_max_n, "Largest N")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Classical inequalities on r_n and the sandwich");
  bounds->add_option("--family", o.family)
      ->check(CLI::IsMember({"all", "robbins", "maria", "hummel", "nanjundiah", "michel", "impens"}))
      ->capture_default_str();
  bounds->add_option("--n-max", o.bounds_n_max)->capture_default_str();
  bounds->add_option("--n-min", o.bounds_n_min, "Defaults to the start of the family's range");
  bounds->add_option("--orders", o.impens_orders, "Sandwich orders n, m range over 0..orders")->capture_default_str();

  auto* exps = app.add_subcommand("expansions", "Feller, Marsaglia, Namias and Mermin");
  exps->add_option("--which", o.which)->check(CLI::IsMember({"feller", "marsaglia", "namias", "mermin"}))->required();
  exps->add_option("--n", o.expansion_n)->capture_default_str();
  exps->add_option("--k-max", o.k_max)->capture_default_str();

  auto* orc = app.add_subcommand("oracle", "Independent ln Γ evaluations with error bounds");
  orc->add_option("--z", o.oracle_z)->required();
  orc->add_option("--method", o.method)
      ->check(CLI::IsMember({"binet2", "euler", "weierstrass"}))
      ->capture_default_str();
  orc->add_option("--terms", o.oracle_terms, "Factors for euler and weierstrass")->capture_default_str();

  auto* rep = app.add_subcommand("report", "Run every check and summarize");
  rep->add_option("--n-max", o.report_n_max)->capture_default_str();

  std::vector<std::string> argv_store{"stirling"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const PrecisionCtx ctx(g.precision_bits);
    Document doc;
    bool any_failed = false;
    if (bern->parsed()) doc = bernoulli_doc(o);
    else if (eval->parsed()) doc = eval_doc(o, g, ctx);
    else if (cons->parsed()) doc = constants_doc(o, g, ctx);
    else if (bounds->parsed()) doc = bounds_doc(o, g, ctx);
    else if (exps->parsed()) doc = expansions_doc(o, g, ctx);
    else if (orc->parsed()) doc = oracle_doc(o, g, ctx);
    else doc = report_doc(o, g, ctx, any_failed);

    doc.meta["precision_bits"] = g.precision_bits;
    const std::string text = render(doc, g.format);
    if (g.output.empty()) {
      out << text;
    } else {
      std::ofstream file(g.output, std::ios::binary);
      if (!file || !(file << text)) {
        err << "error: cannot write " << g.output << "\n";
        return kFailure;
      }
    }
    if (any_failed) {
      err << "report: at least one check failed\n";
      return kFailure;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidityError& e) {
    err << "validity error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace stirling::cli
