// zeta-eta: command-line front end for the zeta_eta library.
//
// Exit codes: 0 ok, 1 numeric failure, 2 I/O, 3 validation or usage.
// Every run writes one JSON metadata line to stderr before computing. Tables go to --out as
// CSV (stdout by default); --json writes the same rows as JSON next to the metadata.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeta_eta/approx.hpp"
#include "zeta_eta/branch_logzeta.hpp"
#include "zeta_eta/distribution.hpp"
#include "zeta_eta/eta.hpp"
#include "zeta_eta/zero_store.hpp"
#include "zeta_eta/zeta.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace zeta_eta;

namespace {

constexpr int kExitNumeric = 1, kExitIo = 2, kExitUsage = 3;
constexpr double kPointPrecision = 1e-10;
constexpr double kScanPrecision = 1e-8;

int exit_code(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::NearSingularity:
    case Errc::OnSingularity:
    case Errc::OnNegativeRealAxisCut:
      return kExitNumeric;
    case Errc::IoError:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised after output was written when a self-check fails.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view v, const std::string& whole) {
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(x))
    throw UsageError("cannot parse complex number '" + whole + "'");
  return x;
}

// "2", "2+0i", "0.5-14.1i", "3i", "1e-3+2e1i"
Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw UsageError("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto coef = [&](std::string_view v) {
    if (v.empty() || v == "+") return 1.0;
    if (v == "-") return -1.0;
    return parse_real(v, text);
  };
  if (split == std::string::npos) return {0.0, coef(s)};
  return {parse_real(std::string_view(s).substr(0, split), text), coef(std::string_view(s).substr(split))};
}

// ---- output -------------------------------------------------------------

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const bool* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

json cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(format_double(*d));
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const bool* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << t.columns[j];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << cell_text(row[j]);
    out << '\n';
  }
}

struct Options {
  int threads = 1;
  std::string zeros;
  std::string zeros_format = "plain";
  double precision = 0.0;  // 0: command default
  std::int64_t sieve_limit = 0;
  std::string out;
  std::string json_out;
  std::vector<std::string> argv;
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << body) || !f.flush()) throw Error(Errc::IoError, "cannot write " + path);
}

void emit_table(const Options& o, const json& meta, const Table& t) {
  std::ostringstream csv;
  write_csv(csv, t);
  if (o.out.empty() || o.out == "-")
    std::cout << csv.str() << std::flush;
  else
    write_file(o.out, csv.str());
  if (!o.json_out.empty()) {
    json doc;
    doc["metadata"] = meta;
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r;
      for (std::size_t j = 0; j < row.size(); ++j) r[t.columns[j]] = cell_json(row[j]);
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    write_file(o.json_out, doc.dump(2) + "\n");
  }
}

// ---- zero store ----------------------------------------------------------

fs::path cache_dir() {
  if (const char* env = std::getenv("ZETA_ETA_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "zeta-eta";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "zeta-eta";
  throw Error(Errc::IoError, "no cache directory: set ZETA_ETA_CACHE");
}

fs::path cache_file() { return cache_dir() / "zeros.csv"; }

constexpr std::string_view kSourceTag = "# source: ";

ZeroFormat parse_format(const std::string& name) {
  if (name == "plain") return ZeroFormat::Plain;
  if (name == "csv") return ZeroFormat::Csv;
  throw UsageError("unknown zero format '" + name + "' (plain or csv)");
}

std::optional<ZeroStore> open_store(const Options& o) {
  if (!o.zeros.empty()) return load_zeros(o.zeros, parse_format(o.zeros_format));
  const fs::path path = cache_file();
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::stringstream body;
  body << in.rdbuf();
  std::string text = body.str(), source = path.string();
  if (text.rfind(kSourceTag, 0) == 0) source = text.substr(kSourceTag.size(), text.find('\n') - kSourceTag.size());
  std::istringstream again(text);
  return parse_zeros(again, ZeroFormat::Csv, source);
}

ZeroStore require_store(const Options& o) {
  auto store = open_store(o);
  if (!store) throw Error(Errc::IoError, "no zero table: run 'zeta-eta zeros import' or pass --zeros");
  return std::move(*store);
}

// FNV-1a over the raw records, so the metadata pins the exact table.
std::string store_digest(const ZeroStore& store) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) h = (h ^ b[i]) * 1099511628211ULL;
  };
  for (const auto& r : store.records()) {
    mix(&r.gamma, sizeof r.gamma);
    mix(&r.beta, sizeof r.beta);
    mix(&r.multiplicity, sizeof r.multiplicity);
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json store_json(const ZeroStore* store) {
  if (!store) return nullptr;
  return {{"source", store->source()},
          {"zeros", store->size()},
          {"t_max", store->t_max()},
          {"hypothetical", store->has_hypothetical()},
          {"fnv1a", store_digest(*store)}};
}

json metadata(const Options& o, const std::string& command, json params, const ZeroStore* store) {
  json meta;
  meta["tool"] = "zeta-eta";
  meta["version"] = ZETA_ETA_VERSION;
  meta["compiler"] = __VERSION__;
  meta["command"] = command;
  meta["argv"] = o.argv;
  meta["threads"] = o.threads;
  meta["params"] = std::move(params);
  meta["store"] = store_json(store);
  return meta;
}

void emit_meta(const json& meta) { std::cerr << meta.dump() << std::endl; }

EvalPrecision precision(const Options& o, double fallback) {
  EvalPrecision p;
  p.abs_err = o.precision > 0.0 ? o.precision : fallback;
  p.validate();
  return p;
}

std::int64_t sieve_limit(const Options& o, double needed) {
  if (o.sieve_limit > 0) return o.sieve_limit;
  return static_cast<std::int64_t>(std::ceil(needed * (1.0 + 1e-12))) + 2;
}

json kernel_json(const Kernel& k) { return {{"family", family_name(k.family())}, {"name", k.name()}, {"d", k.degree()}}; }

// ---- commands -------------------------------------------------------------

int cmd_zeros_import(const Options& o, const std::string& format, const std::string& path) {
  const ZeroStore store = load_zeros(path, parse_format(format));
  const fs::path target = cache_file();
  emit_meta(metadata(o, "zeros import", {{"format", format}, {"path", path}, {"cache", target.string()}}, &store));
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + target.parent_path().string() + ": " + ec.message());
  std::ostringstream body;
  std::error_code abs_ec;
  const fs::path abs = fs::absolute(path, abs_ec);
  body << kSourceTag << (abs_ec ? path : abs.string()) << "\n";
  body << "gamma,beta,multiplicity\n";
  for (const auto& r : store.records())
    body << format_double(r.gamma) << ',' << format_double(r.beta) << ',' << r.multiplicity << '\n';
  const fs::path tmp = target.string() + ".tmp";
  write_file(tmp.string(), body.str());
  fs::rename(tmp, target, ec);
  if (ec) throw Error(Errc::IoError, "cannot replace " + target.string() + ": " + ec.message());
  std::cout << store.size() << " zeros up to t = " << format_double(store.t_max()) << " cached in "
            << target.string() << "\n";
  return 0;
}

struct EvalArgs {
  std::string what;
  std::string s;
  double t = std::numeric_limits<double>::quiet_NaN();
  int m = -1;
  std::string route = "vertical";
  bool check_routes = false;
};

std::string value_line(Complex v, double err) {
  return format_double(v.real()) + "," + format_double(v.imag()) + "," + format_double(err);
}

int cmd_eval(const Options& o, const EvalArgs& a) {
  const EvalPrecision prec = precision(o, kPointPrecision);
  const bool needs_t = a.what == "s_m";
  if (needs_t ? std::isnan(a.t) : a.s.empty())
    throw UsageError(a.what + " needs " + (needs_t ? "--t" : "--s"));
  const Complex s = needs_t ? Complex(0.5, a.t) : parse_complex(a.s);
  if ((a.what == "eta" || a.what == "s_m") && a.m < 0) throw UsageError(a.what + " needs --m >= 0");
  if (a.check_routes && a.what != "eta") throw UsageError("--check-routes applies to eta only");

  std::optional<ZeroStore> store;
  if (a.what == "eta" || a.what == "s_m")
    store = require_store(o);
  else if (a.what == "logzeta")
    store = open_store(o);

  json params = {{"what", a.what}, {"s", {s.real(), s.imag()}}, {"precision", prec.abs_err}};
  if (a.m >= 0) params["m"] = a.m;
  if (a.what == "eta") params["route"] = a.check_routes ? "both" : a.route;
  const json meta = metadata(o, "eval", params, store ? &*store : nullptr);
  emit_meta(meta);

  Table table{{"route", "re", "im", "est_err"}, {}};
  std::vector<std::string> lines;
  auto add = [&](const std::string& route, Complex v, double err) {
    table.rows.push_back({route, v.real(), v.imag(), err});
    lines.push_back(value_line(v, err));
  };

  if (a.what == "zeta") {
    add("direct", zeta(s, prec), prec.abs_err);
  } else if (a.what == "logzeta") {
    add("direct", store ? log_zeta(s, *store, prec) : log_zeta(s, prec), prec.abs_err);
  } else if (a.what == "s_m") {
    add("vertical", Complex(s_m(a.t, a.m, *store, prec), 0.0), prec.abs_err / kPi);
  } else if (a.what == "eta") {
    if (a.check_routes) {
      if (store->has_hypothetical())
        throw Error(Errc::HypothesisViolated, "the routes only agree on a table without hypothetical zeros");
      const EtaValue v = eta_vertical(s, a.m, *store, prec);
      const EtaValue it = eta_iterated(s, a.m, *store, prec);
      add("vertical", v.value, v.est_err);
      add("iterated", it.value, it.est_err);
    } else if (a.route == "vertical" || a.route == "iterated") {
      const EtaValue v = a.route == "vertical" ? eta_vertical(s, a.m, *store, prec) : eta_iterated(s, a.m, *store, prec);
      add(a.route, v.value, v.est_err);
    } else {
      throw UsageError("unknown route '" + a.route + "'");
    }
  } else {
    throw UsageError("unknown quantity '" + a.what + "'");
  }

  for (const auto& l : lines) std::cout << l << '\n';
  std::cout << std::flush;
  if (!o.json_out.empty()) {
    Options quiet = o;
    quiet.out = "/dev/null";
    emit_table(quiet, meta, table);
  }
  if (a.check_routes) {
    const double diff = std::abs(Complex(std::get<double>(table.rows[0][1]) - std::get<double>(table.rows[1][1]),
                                         std::get<double>(table.rows[0][2]) - std::get<double>(table.rows[1][2])));
    const double allowed = std::get<double>(table.rows[0][3]) + std::get<double>(table.rows[1][3]);
    std::cerr << "route difference " << format_double(diff) << " (allowed " << format_double(allowed) << ")\n";
    if (!(diff <= allowed)) throw CheckFailed("routes disagree beyond the combined error estimate");
  }
  return 0;
}

struct ScanArgs {
  int m = 0;
  std::vector<double> X;
  double H = 1.0;
  std::string kernel = "poly_bump";
  int d = 4;
  double sigma = 0.5;
  double t_from = std::numeric_limits<double>::quiet_NaN();
  double t_to = std::numeric_limits<double>::quiet_NaN();
  double step = 1.0;
};

int cmd_residual_scan(const Options& o, const ScanArgs& a) {
  const EvalPrecision prec = precision(o, kScanPrecision);
  if (a.X.empty()) throw UsageError("--X needs at least one value");
  if (!(a.step > 0.0)) throw UsageError("--step must be positive");
  if (!(a.t_from >= 14.0)) throw Error(Errc::InvalidArgument, "residual scans need t >= 14");
  if (!(a.t_to >= a.t_from)) throw UsageError("--t-to must be >= --t-from");
  const Kernel kernel = make_kernel(parse_family(a.kernel), a.d);

  std::vector<ApproxConfig> cfgs;
  double x_need = 0.0;
  for (double X : a.X) {
    ApproxConfig c{a.m, X, a.H, kernel};
    c.validate();
    cfgs.push_back(c);
    x_need = std::max(x_need, std::pow(X, 1.0 + 1.0 / a.H));
  }
  std::vector<double> ts;
  for (std::int64_t i = 0;; ++i) {
    const double t = a.t_from + double(i) * a.step;
    if (t > a.t_to + 1e-9 * a.step) break;
    ts.push_back(t);
  }
  const ZeroStore store = require_store(o);
  const std::int64_t limit = sieve_limit(o, x_need);

  json params = {{"m", a.m},         {"X", a.X},       {"H", a.H},         {"kernel", kernel_json(kernel)},
                 {"sigma", a.sigma}, {"t_from", a.t_from}, {"t_to", a.t_to}, {"step", a.step},
                 {"precision", prec.abs_err}, {"sieve_limit", limit}};
  const json meta = metadata(o, "residual-scan", params, &store);
  emit_meta(meta);

  const MangoldtSieve sieve(limit);
  std::vector<DirichletPoly> polys;
  for (const auto& c : cfgs) polys.emplace_back(c, sieve);
  const std::int64_t nx = static_cast<std::int64_t>(cfgs.size());
  std::vector<ResidualReport> reps(ts.size() * cfgs.size());
  parallel_for(static_cast<std::int64_t>(reps.size()), o.threads, [&](std::int64_t k) {
    const std::int64_t i = k / nx, j = k % nx;
    reps[k] = residual(Complex(a.sigma, ts[i]), cfgs[j], polys[j], store, prec);
  });

  Table table{{"t", "X", "sigma", "eta_re", "eta_im", "eta_err", "poly_re", "poly_im", "y_re", "y_im", "r_re", "r_im",
               "r_abs", "bound_esrm", "bound_esrm2", "rh_form", "ratio"},
              {}};
  for (const auto& r : reps)
    table.rows.push_back({r.s.imag(), r.cfg.X, r.s.real(), r.eta.real(), r.eta.imag(), r.eta_err, r.poly.real(),
                          r.poly.imag(), r.y.real(), r.y.imag(), r.r.real(), r.r.imag(), std::abs(r.r), r.bound_esrm,
                          r.bound_esrm2, r.rh_form_applies, r.ratio});
  emit_table(o, meta, table);
  return 0;
}

struct DistArgs {
  double T = 1000.0;
  std::int64_t count = 10000;
  std::string scheme = "stratified-jitter";
  std::optional<std::uint64_t> seed;
  std::string interval;  // empty: per-command default
  std::vector<double> V;
  int m = 1;
  std::vector<double> X;
  int k = 1;
  double sigma = 0.5;
  double C = 10.0;
  bool waive_range = false;
};

GridSpec grid_from(const DistArgs& a, Interval fallback) {
  GridSpec g;
  g.T = a.T;
  g.count = a.count;
  g.scheme = parse_scheme(a.scheme);
  g.seed = *a.seed;
  g.interval = a.interval.empty() ? fallback : parse_interval(a.interval);
  g.validate();
  return g;
}

json grid_json(const GridSpec& g) {
  return {{"T", g.T},
          {"count", g.count},
          {"scheme", scheme_name(g.scheme)},
          {"seed", g.seed},
          {"interval", interval_name(g.interval)},
          {"lo", g.lo()},
          {"hi", g.hi()}};
}

int cmd_dist(const Options& o, const std::string& sub, const DistArgs& a) {
  if (!a.seed) throw UsageError("--seed is required for distribution runs");
  const bool moments = sub == "moments";
  const GridSpec grid = grid_from(a, moments ? Interval::FromFourteen : Interval::Doubling);
  const ZeroStore store = require_store(o);

  if (sub == "tails") {
    if (a.V.empty()) throw UsageError("tails needs --V");
    const json meta = metadata(o, "dist tails", {{"grid", grid_json(grid)}, {"V", a.V}}, &store);
    emit_meta(meta);
    const auto rows = tail_table(a.V, grid, store, o.threads);
    Table table{{"V", "fraction", "stderr", "gaussian_ref", "jutila_ref"}, {}};
    for (const auto& r : rows)
      table.rows.push_back({r.est.V, r.est.fraction, r.est.std_error, r.est.ref_gaussian, r.jutila_ref});
    emit_table(o, meta, table);
    return 0;
  }

  const EvalPrecision prec = precision(o, kScanPrecision);
  if (a.X.empty()) throw UsageError(sub + " needs --X");
  const double x_max = *std::max_element(a.X.begin(), a.X.end());
  const std::int64_t limit = sieve_limit(o, x_max);

  if (sub == "tmeasure") {
    if (a.V.empty()) throw UsageError("tmeasure needs --V");
    if (a.X.size() != 1) throw UsageError("tmeasure takes a single --X");
    const json meta = metadata(o, "dist tmeasure",
                               {{"grid", grid_json(grid)}, {"V", a.V}, {"m", a.m}, {"X", a.X[0]}, {"sigma", 0.5},
                                {"precision", prec.abs_err}, {"sieve_limit", limit}},
                               &store);
    emit_meta(meta);
    const MangoldtSieve sieve(limit);
    const auto values = residual_moduli(a.m, a.X[0], 0.5, grid, store, sieve, prec, o.threads);
    Table table{{"V", "fraction", "count_exceed", "count", "stderr", "gaussian_ref"}, {}};
    for (double V : a.V) {
      const auto e = make_estimate(V, values, std::numeric_limits<double>::quiet_NaN());
      table.rows.push_back({e.V, e.fraction, e.count_exceed, e.count, e.std_error, e.ref_gaussian});
    }
    emit_table(o, meta, table);
    return 0;
  }

  if (moments) {
    MomentOptions mo;
    mo.k = a.k;
    mo.sigma = a.sigma;
    mo.C = a.C;
    mo.waive_range = a.waive_range;
    const json meta = metadata(o, "dist moments",
                               {{"grid", grid_json(grid)}, {"m", a.m}, {"X", a.X}, {"k", a.k}, {"sigma", a.sigma},
                                {"C", a.C}, {"waive_range", a.waive_range}, {"precision", prec.abs_err},
                                {"sieve_limit", limit}},
                               &store);
    emit_meta(meta);
    const MangoldtSieve sieve(limit);
    Table table{{"X", "m", "k", "sigma", "empirical", "bound", "max_abs", "samples", "range_waived", "interval"}, {}};
    for (double X : a.X) {
      const auto r = moment_residual(a.m, X, grid, store, sieve, prec, mo, o.threads);
      table.rows.push_back({X, std::int64_t(a.m), std::int64_t(a.k), a.sigma, r.empirical, r.bound, r.max_abs,
                            r.samples, r.range_waived, interval_name(grid.interval)});
    }
    emit_table(o, meta, table);
    return 0;
  }
  throw UsageError("unknown dist command '" + sub + "'");
}

void report(const std::string& msg) { std::cerr << "zeta-eta: error: " << msg << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithm of zeta, its iterated integrals and their prime-sum approximation"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ZETA_ETA_VERSION));

  Options o;
  for (int i = 0; i < argc; ++i) o.argv.emplace_back(argv[i]);
  app.add_option("--threads", o.threads, "Worker threads for scans")->check(CLI::Range(1, 1024));
  app.add_option("--zeros", o.zeros, "Zero table to use instead of the cache");
  app.add_option("--zeros-format", o.zeros_format, "Format of --zeros: plain or csv");
  app.add_option("--precision", o.precision, "Absolute target per evaluation (default 1e-10 points, 1e-8 scans)");
  app.add_option("--sieve-limit", o.sieve_limit, "Sieve bound for Lambda(n) (default: what X needs)");
  app.add_option("--out", o.out, "CSV output file (default stdout)");
  app.add_option("--json", o.json_out, "JSON mirror of the output with run metadata");

  auto* zeros = app.add_subcommand("zeros", "Zero table management");
  zeros->require_subcommand(1);
  auto* import = zeros->add_subcommand("import", "Parse a zero table and store it in the cache");
  std::string import_format = "plain", import_path;
  import->add_option("--format", import_format, "plain or csv")->check(CLI::IsMember({"plain", "csv"}));
  import->add_option("--path", import_path, "Zero file")->required();

  auto* eval = app.add_subcommand("eval", "Point evaluation; prints re,im,est_err");
  EvalArgs ea;
  eval->add_option("what", ea.what, "zeta, logzeta, eta or s_m")
      ->required()
      ->check(CLI::IsMember({"zeta", "logzeta", "eta", "s_m"}));
  eval->add_option("--s", ea.s, "Complex argument, e.g. 0.5+20i");
  eval->add_option("--t", ea.t, "Height for s_m");
  eval->add_option("--m", ea.m, "Order");
  eval->add_option("--route", ea.route, "eta route: vertical or iterated");
  eval->add_flag("--check-routes", ea.check_routes, "Print both eta routes; exit 1 if they disagree");

  auto* scan = app.add_subcommand("residual-scan", "Residual of the prime-sum approximation on a t-grid");
  ScanArgs sa;
  scan->add_option("--m", sa.m, "Order")->required();
  scan->add_option("--X", sa.X, "Comma-separated X values")->required()->delimiter(',');
  scan->add_option("--H", sa.H, "Smoothing parameter");
  scan->add_option("--kernel", sa.kernel, "poly_bump or tent");
  scan->add_option("--d", sa.d, "poly_bump degree");
  scan->add_option("--sigma", sa.sigma, "Real part");
  scan->add_option("--t-from", sa.t_from, "First height (>= 14)")->required();
  scan->add_option("--t-to", sa.t_to, "Last height")->required();
  scan->add_option("--step", sa.step, "Height step");

  auto* dist = app.add_subcommand("dist", "Value-distribution runs");
  dist->require_subcommand(1);
  DistArgs da;
  auto grid_opts = [&](CLI::App* c) {
    c->add_option("--T", da.T, "Height scale");
    c->add_option("--count", da.count, "Grid samples");
    c->add_option("--scheme", da.scheme, "uniform, stratified-jitter or seeded-random");
    c->add_option("--seed", da.seed, "Grid seed (required)");
    c->add_option("--interval", da.interval, "T-2T or 14-T");
  };
  auto* tails = dist->add_subcommand("tails", "Exceedance table for log|zeta(1/2+it)|");
  grid_opts(tails);
  tails->add_option("--V", da.V, "Comma-separated thresholds")->delimiter(',');
  auto* tmeasure = dist->add_subcommand("tmeasure", "Exceedance of the residual modulus on the critical line");
  grid_opts(tmeasure);
  tmeasure->add_option("--V", da.V, "Comma-separated thresholds")->delimiter(',');
  tmeasure->add_option("--m", da.m, "Order");
  tmeasure->add_option("--X", da.X, "Truncation point")->delimiter(',');
  auto* moments = dist->add_subcommand("moments", "Mean 2k-th power of the residual");
  grid_opts(moments);
  moments->add_option("--m", da.m, "Order (>= 1)");
  moments->add_option("--X", da.X, "Comma-separated X values")->delimiter(',');
  moments->add_option("--k", da.k, "Moment index");
  moments->add_option("--sigma", da.sigma, "Real part");
  moments->add_option("--C", da.C, "Trial constant in the bound");
  moments->add_flag("--waive-range", da.waive_range, "Run with X above T^(1/(135k)) and flag it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report(e.what());
    return kExitUsage;
  }

  try {
    if (*import) return cmd_zeros_import(o, import_format, import_path);
    if (*eval) return cmd_eval(o, ea);
    if (*scan) return cmd_residual_scan(o, sa);
    if (*tails) return cmd_dist(o, "tails", da);
    if (*tmeasure) return cmd_dist(o, "tmeasure", da);
    if (*moments) return cmd_dist(o, "moments", da);
    report("no command");
    return kExitUsage;
  } catch (const Error& e) {
    report(std::string(e.what()) + (e.line() ? " (line " + std::to_string(*e.line()) + ")" : ""));
    return exit_code(e.code());
  } catch (const UsageError& e) {
    report(e.what());
    return kExitUsage;
  } catch (const CheckFailed& e) {
    report(e.what());
    return kExitNumeric;
  } catch (const std::filesystem::filesystem_error& e) {
    report(e.what());
    return kExitIo;
  }
}
