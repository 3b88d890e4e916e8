// qgen: exact q-Euler, q-Genocchi and q-Bernoulli numbers, series oracle and
// identity verification from the command line.
//
// Exit status: 0 success, 1 failed check or domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qgen/arbitration.hpp"
#include "qgen/classical.hpp"
#include "qgen/identities.hpp"
#include "qgen/qfamilies.hpp"
#include "qgen/records.hpp"
#include "qgen/render.hpp"

namespace {

using namespace qgen;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t max_n() {
  if (const char* env = std::getenv("QGEN_MAX_N")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("QGEN_MAX_N must be a nonnegative integer");
    }
  }
  return 64;
}

void check_n(std::size_t n) {
  if (n > max_n()) throw UsageError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n()));
}

// "q=1/2" -> 1/2
std::string strip_key(const std::string& text, const std::string& key) {
  const std::string prefix = key + "=";
  if (text.rfind(prefix, 0) != 0) throw UsageError("expected " + prefix + "<value>, got '" + text + "'");
  return text.substr(prefix.size());
}

bool is_classical(const std::string& family) {
  return family == "euler" || family == "genocchi" || family == "bernoulli";
}

RatFn number_value(const std::string& family, std::size_t n) {
  if (family == "euler") return RatFn(euler_number(n));
  if (family == "genocchi") return RatFn(genocchi_number(n));
  if (family == "bernoulli") return RatFn(bernoulli_number(n));
  if (family == "q-euler") return q_euler_number(n);
  if (family == "q-genocchi") return q_genocchi_number(n);
  if (family == "q-bernoulli") return q_bernoulli_number(n);
  throw UsageError("unknown family '" + family + "'");
}

std::string render_one(const OutputRecord& record, const std::string& format) {
  if (format == "plain") return record.plain + "\n";
  if (format == "latex") return record.latex + "\n";
  if (format == "json") return emit({record}, "json");
  throw UsageError("unknown format '" + format + "'");
}

struct NumArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t base_power = 0;
  std::string eval;
  bool limit = false;
  std::string format = "plain";
};

std::string run_num(const NumArgs& a) {
  check_n(a.n);
  RatFn value = number_value(a.family, a.n);
  if (a.base_power != 0) {
    if (is_classical(a.family)) throw UsageError("--base-power applies to q-families only");
    value = value.subst_qpow(a.base_power);
  }
  if (!a.eval.empty() && a.limit) throw UsageError("--eval and --limit-q1 are exclusive");
  std::optional<Rat> q;
  if (!a.eval.empty()) {
    q = Rat::parse(strip_key(a.eval, "q"));
    value = RatFn(value.eval(*q));
  } else if (a.limit) {
    q = Rat(1);
    value = RatFn(value.eval_at_one());
  }
  OutputRecord record = number_record(a.family, a.n, value);
  record.q = q;
  return render_one(record, a.format);
}

struct PolyArgs {
  std::string family;
  std::size_t n = 0;
  std::string at;
  std::string format = "plain";
};

std::string run_poly(const PolyArgs& a) {
  check_n(a.n);
  std::optional<long> x;
  if (!a.at.empty()) {
    const std::string v = strip_key(a.at, "x");
    try {
      x = std::stol(v);
    } catch (const std::exception&) {
      throw UsageError("x must be an integer, got '" + v + "'");
    }
    if (*x < 0) throw UsageError("x must be >= 0");
  }
  const auto xi = static_cast<std::size_t>(x.value_or(0));
  if (a.family == "euler" || a.family == "genocchi") {
    const XPoly p = a.family == "euler" ? euler_poly(a.n) : genocchi_poly(a.n);
    if (x) return render_one(number_record(a.family, a.n, RatFn(p.eval(Rat(*x)))), a.format);
    return render_one(polynomial_record(a.family, a.n, p), a.format);
  }
  if (a.family == "q-euler" || a.family == "q-genocchi") {
    const PolyX p = a.family == "q-euler" ? q_euler_poly(a.n) : q_genocchi_poly(a.n);
    if (x) return render_one(number_record(a.family, a.n, p.eval_int(xi)), a.format);
    return render_one(polynomial_record(a.family, a.n, p), a.format);
  }
  throw UsageError("no polynomial family '" + a.family + "' (use euler, genocchi, q-euler or q-genocchi)");
}

std::string run_table(const std::string& family, std::size_t n_max, const std::string& format) {
  check_n(n_max);
  std::vector<OutputRecord> records;
  for (std::size_t n = 0; n <= n_max; ++n) records.push_back(number_record(family, n, number_value(family, n)));
  try {
    return emit(records, format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct OracleArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t x = 0;
  std::string q;
  std::string tol;
  std::string variant = "corrected";
};

int run_oracle(const OracleArgs& a, std::string& out) {
  check_n(a.n);
  const auto family = qfamily_from_name(a.family);
  if (!family) throw UsageError("oracle family must be q-euler, q-genocchi or q-bernoulli");
  if (a.variant != "printed" && a.variant != "corrected") throw UsageError("--variant must be printed or corrected");
  const GenocchiForm form = a.variant == "printed" ? GenocchiForm::without_q_two : GenocchiForm::with_q_two;
  const OracleCheck check = check_closed_form(*family, a.n, a.x, Rat::parse(a.q), Rat::parse(a.tol), form);
  out = to_json(check).dump(2) + "\n";
  return check.contained ? 0 : kExitFailure;
}

// "n=1..8,m=1,3,5": a token with '=' starts a key, bare tokens extend it.
ParamRanges parse_param_ranges(const std::string& text) {
  ParamRanges ranges;
  std::string key;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (const auto eq = token.find('='); eq != std::string::npos) {
      key = token.substr(0, eq);
      token = token.substr(eq + 1);
      ranges[key];
    }
    if (key.empty()) throw UsageError("--params must start with name=values");
    const auto dots = token.find("..");
    try {
      if (dots == std::string::npos) {
        ranges[key].push_back(std::stol(token));
      } else {
        const long lo = std::stol(token.substr(0, dots));
        const long hi = std::stol(token.substr(dots + 2));
        for (long v = lo; v <= hi; ++v) ranges[key].push_back(v);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad parameter value '" + token + "'");
    }
  }
  return ranges;
}

int run_verify(const std::string& id_name, const std::string& variant, const std::string& params, std::string& out) {
  const auto id = identity_from_name(id_name);
  if (!id) throw UsageError("unknown identity id '" + id_name + "'");
  SuiteEntry entry{id_name, parse_param_ranges(params), {}};
  if (!variant.empty()) entry.variants.push_back(variant);
  for (const auto& [name, values] : entry.ranges) {
    if (name == "n") {
      for (long v : values) check_n(static_cast<std::size_t>(std::max(0L, v)));
    }
  }
  SuiteConfig config;
  config.entries.push_back(entry);
  const auto reports = run_suite(config);
  out = to_json(reports, false).dump(2) + "\n";
  const bool all_hold =
      std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds_exact; });
  return all_hold ? 0 : kExitFailure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int run_suite_command(const std::string& config_path, std::string report_path, std::size_t threads,
                      std::string& out) {
  SuiteConfig config = config_path.empty() ? default_suite_config() : parse_suite_config(read_file(config_path));
  if (threads > 0) config.threads = threads;
  if (report_path.empty()) report_path = config.report_path;

  const auto reports = run_suite(config);
  std::ostringstream text;
  text << summary_table(reports);

  bool arbitration_ok = true;
  if (config.oracle_arbitration) {
    Rat tol = Rat(1) / Rat(10).pow(config.oracle_tol_exp);
    const auto verdicts = arbitrate_genocchi_forms(8, {0, 1, 2, 3}, {Rat(1, 3), Rat(1, 2), Rat(2, 3)}, tol);
    text << "\nq-Genocchi closed form vs series (n<=8, x<=3, q in {1/3,1/2,2/3}, tol 10^-"
         << config.oracle_tol_exp << ")\n";
    std::size_t passing = 0;
    for (const auto& v : verdicts) {
      const char* name = v.form == GenocchiForm::with_q_two ? "with [2]_q   " : "without [2]_q";
      text << "  " << name << "  " << v.contained << "/" << v.total << (v.passes() ? "  PASS" : "  FAIL") << "\n";
      if (v.passes()) ++passing;
    }
    const bool with_passes = verdicts.back().passes();
    arbitration_ok = passing == 1 && with_passes;
  }
  const bool ok = all_expected_hold(reports) && arbitration_ok;
  text << "\n" << reports.size() << " checks, " << (ok ? "all expected identities hold" : "FAILURES") << "\n";
  if (!report_path.empty()) write_file(report_path, to_json(reports).dump(2) + "\n");
  out = text.str();
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Euler, q-Genocchi and q-Bernoulli numbers and identity checks"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  const std::vector<std::string> families = {"euler", "genocchi", "bernoulli", "q-euler", "q-genocchi", "q-bernoulli"};
  const std::vector<std::string> formats = {"plain", "latex", "json"};

  NumArgs num;
  auto* num_cmd = app.add_subcommand("num", "A single number of a family");
  num_cmd->add_option("family", num.family)->required()->check(CLI::IsMember(families));
  num_cmd->add_option("n", num.n)->required();
  num_cmd->add_option("--base-power", num.base_power, "Replace q by q^m")->check(CLI::PositiveNumber);
  num_cmd->add_option("--eval", num.eval, "Evaluate at q=<a/b>");
  num_cmd->add_flag("--limit-q1", num.limit, "Limit q -> 1");
  num_cmd->add_option("--format", num.format)->check(CLI::IsMember(formats));

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "A polynomial of a family (q-families in X = q^x)");
  poly_cmd->add_option("family", poly.family)->required()->check(CLI::IsMember(families));
  poly_cmd->add_option("n", poly.n)->required();
  poly_cmd->add_option("--at", poly.at, "Evaluate at x=<int>");
  poly_cmd->add_option("--format", poly.format)->check(CLI::IsMember(formats));

  std::string table_family, table_format = "json";
  std::size_t table_max = 0;
  auto* table_cmd = app.add_subcommand("table", "Numbers n = 0..N of a family");
  table_cmd->add_option("family", table_family)->required()->check(CLI::IsMember(families));
  table_cmd->add_option("--max-n", table_max)->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv", "latex", "plain"}));

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Series enclosure vs closed form at rational q");
  oracle_cmd->add_option("family", oracle.family)->required();
  oracle_cmd->add_option("n", oracle.n)->required();
  oracle_cmd->add_option("--x", oracle.x);
  oracle_cmd->add_option("--q", oracle.q)->required();
  oracle_cmd->add_option("--tol", oracle.tol)->required();
  oracle_cmd->add_option("--variant", oracle.variant, "q-genocchi closed form: printed or corrected");

  std::string verify_id, verify_variant, verify_params;
  auto* verify_cmd = app.add_subcommand("verify", "Exact check of one cataloged identity");
  verify_cmd->add_option("--id", verify_id)->required();
  verify_cmd->add_option("--variant", verify_variant);
  verify_cmd->add_option("--params", verify_params, "e.g. n=1..8,m=1,3,5");

  std::string suite_config, suite_report;
  std::size_t suite_threads = 0;
  auto* suite_cmd = app.add_subcommand("suite", "Run the identity suite");
  suite_cmd->add_option("--config", suite_config);
  suite_cmd->add_option("--report", suite_report, "JSON report path");
  suite_cmd->add_option("--threads", suite_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  std::string out;
  int rc = 0;
  try {
    if (*num_cmd) {
      out = run_num(num);
    } else if (*poly_cmd) {
      out = run_poly(poly);
    } else if (*table_cmd) {
      out = run_table(table_family, table_max, table_format);
    } else if (*oracle_cmd) {
      rc = run_oracle(oracle, out);
    } else if (*verify_cmd) {
      rc = run_verify(verify_id, verify_variant, verify_params, out);
    } else if (*suite_cmd) {
      rc = run_suite_command(suite_config, suite_report, suite_threads, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "qgen: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qgen: " << e.what() << "\n";
    return kExitFailure;
  }

  if (out_path.empty()) {
    std::cout << out;
  } else {
    try {
      write_file(out_path, out);
    } catch (const std::exception& e) {
      std::cerr << "qgen: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  return rc;
}
