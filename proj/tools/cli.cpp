#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "zonal/io.hpp"
#include "zonal/moments.hpp"
#include "zonal/zonal.hpp"

namespace zonal::cli {

namespace {

constexpr int kMaxDegree = 12;
constexpr std::uint64_t kDefaultSeed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string f = "1";
  int n = 0;
  std::string basis = "powersum";
  std::string format = "text";
  std::string a, b, kappa;
  std::string kind;
  std::string sampler = "angles";
  std::string table_file;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  int max_degree = 12;
};

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  if (auto dots = s.find(".."); dots != std::string::npos)
    return {parse_int(s.substr(0, dots), "degree range"), parse_int(s.substr(dots + 2), "degree range")};
  const int f = parse_int(s, "degree");
  return {f, f};
}

void check_degree(int f) {
  if (f < 1 || f > kMaxDegree)
    throw UsageError("degree " + std::to_string(f) + " outside supported range 1.." + std::to_string(kMaxDegree));
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const int f = parse_int(cfg.f, "degree");
  check_degree(f);
  Basis basis;
  try {
    basis = parse_basis(cfg.basis);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto view = make_table_view(*zonal_table(f), basis);
  if (cfg.format == "json") out << table_to_json(view);
  else if (cfg.format == "csv") out << table_to_csv(view);
  else if (cfg.format == "latex") out << table_to_latex(view);
  else if (cfg.format == "text") out << table_to_text(view);
  else throw UsageError("unsupported format '" + cfg.format + "'");
  return 0;
}

int print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  int status = 0;
  for (const auto& c : checks) {
    const char* tag = c.severity == Severity::pass ? "PASS" : c.severity == Severity::warning ? "WARN" : "FAIL";
    out << tag << "  " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    if (c.severity == Severity::fail) status = 1;
  }
  return status;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.table_file.empty()) {
    std::ifstream in(cfg.table_file);
    if (!in) throw UsageError("cannot read table file '" + cfg.table_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    TableView view;
    try {
      view = table_from_json(buf.str());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const ZonalTable table = to_zonal_table(view);
    int status = print_checks(verify_table(table), out);
    out << (status ? "verification FAILED\n" : "all checks passed\n");
    return status;
  }
  const auto [lo, hi] = parse_range(cfg.f);
  if (lo > hi) throw UsageError("empty degree range " + cfg.f);
  check_degree(lo);
  check_degree(hi);
  int status = 0;
  for (int f = lo; f <= hi; ++f) status |= print_checks(verify_table(*zonal_table(f)), out);
  out << (status ? "verification FAILED\n" : "all checks passed\n");
  return status;
}

DiagonalSpec parse_spectrum(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return DiagonalSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
  McOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  if (cfg.sampler == "angles") opt.sampler = Sampler::angles;
  else if (cfg.sampler == "oracle") opt.sampler = Sampler::oracle;
  else throw UsageError("unknown sampler '" + cfg.sampler + "'");

  JsonObject obj;
  obj.add_string("kind", cfg.kind);
  auto check_n = [&](int n) {
    if (cfg.n != 0 && cfg.n != n)
      throw UsageError("--n " + std::to_string(cfg.n) + " does not match the " + std::to_string(n) +
                       " eigenvalues given");
  };
  auto check_pair = [&](const DiagonalSpec& a, const DiagonalSpec& b) {
    if (a.n() != b.n())
      throw UsageError("--A has " + std::to_string(a.n()) + " eigenvalues but --B has " + std::to_string(b.n()));
    check_n(a.n());
    obj.add_integer("n", a.n()).add_string("A", cfg.a).add_string("B", cfg.b);
  };

  MomentReport report;
  if (cfg.kind == "trace-power") {
    const int f = parse_int(cfg.f, "degree");
    if (f < 0 || f > kMaxDegree) throw UsageError("degree out of range");
    const auto a = parse_spectrum(cfg.a, "--A"), b = parse_spectrum(cfg.b, "--B");
    check_pair(a, b);
    obj.add_integer("f", f);
    report = mc_trace_power_integral(a, b, f, opt);
  } else if (cfg.kind == "zonal-split") {
    Partition kappa;
    try {
      kappa = Partition::parse(cfg.kappa);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--kappa: ") + e.what());
    }
    if (kappa.empty() || kappa.weight() > kMaxDegree) throw UsageError("--kappa must be a nonempty partition");
    const auto a = parse_spectrum(cfg.a, "--A"), b = parse_spectrum(cfg.b, "--B");
    check_pair(a, b);
    if (kappa.length() > a.n()) throw UsageError("--kappa has more parts than the dimension");
    obj.add_string("kappa", kappa.str());
    try {
      report = mc_zonal_splitting(kappa, a, b, opt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (cfg.kind == "trace-AH") {
    const int f = parse_int(cfg.f, "degree");
    if (f < 0 || f > 2 * kMaxDegree) throw UsageError("degree out of range");
    if (cfg.a.empty()) throw UsageError("--A is required");
    RationalMatrix a;
    try {
      a = cfg.a.find(';') == std::string::npos ? RationalMatrix::diagonal(DiagonalSpec::parse(cfg.a))
                                               : RationalMatrix::parse(cfg.a);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--A: ") + e.what());
    }
    check_n(a.n);
    obj.add_integer("n", a.n).add_string("A", cfg.a).add_integer("f", f);
    report = mc_trace_ah(a, f, opt);
  } else if (cfg.kind == "exp-series") {
    if (cfg.max_degree < 0 || cfg.max_degree > 2 * kMaxDegree) throw UsageError("--max-degree out of range");
    const auto a = parse_spectrum(cfg.a, "--A"), b = parse_spectrum(cfg.b, "--B");
    check_pair(a, b);
    obj.add_integer("max_degree", cfg.max_degree);
    const auto series = hyper0f0(a, b, cfg.max_degree);
    obj.add_number("series_value", series.value);
    if (series.tail_bound) obj.add_number("tail_bound", *series.tail_bound);
    report = mc_exp_series(a, b, cfg.max_degree, opt);
  } else {
    throw UsageError("unknown estimate kind '" + cfg.kind + "'");
  }
  obj.add_string("sampler", cfg.sampler);
  add_report_fields(obj, report);
  out << obj.dump();
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zonal polynomials and orthogonal-group moment integrals"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* table = app.add_subcommand("table", "Print all zonal polynomials of one degree");
  table->add_option("--f", cfg.f, "Degree (1.." + std::to_string(kMaxDegree) + ")");
  table->add_option("--basis", cfg.basis, "monomial | powersum")->capture_default_str();
  table->add_option("--format", cfg.format, "json | csv | latex | text")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check tables against known values and identities");
  verify->add_option("--f", cfg.f, "Degree or range, e.g. 1..6");
  verify->add_option("--table-file", cfg.table_file, "Verify a JSON table instead of computing one");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate against the closed form");
  estimate->add_option("kind", cfg.kind, "trace-power | zonal-split | trace-AH | exp-series")->required();
  estimate->add_option("--f", cfg.f, "Degree");
  estimate->add_option("--n", cfg.n, "Dimension (checked against the eigenvalue count)");
  estimate->add_option("--A", cfg.a, "Eigenvalues '1,2' (trace-AH also takes a matrix '1,0;0,2')");
  estimate->add_option("--B", cfg.b, "Eigenvalues");
  estimate->add_option("--kappa", cfg.kappa, "Partition, e.g. 2,1");
  estimate->add_option("--samples", cfg.samples, "Monte Carlo draws")->capture_default_str();
  estimate->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  estimate->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  estimate->add_option("--max-degree", cfg.max_degree, "Series truncation (exp-series)")->capture_default_str();
  estimate->add_option("--sampler", cfg.sampler, "angles | oracle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (table->parsed()) return cmd_table(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_estimate(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zonal::cli
