#include "zeta_eta/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "zeta_eta/branch_logzeta.hpp"
#include "zeta_eta/eta.hpp"
#include "zeta_eta/zeta.hpp"

namespace zeta_eta {
namespace {

constexpr double kNudge = 1e-6;

// mt19937_64 output is fixed by the standard; the conversion to [0, 1) is done here because
// std::uniform_real_distribution is not.
double unit_draw(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

void check_table(const GridSpec& grid, const ZeroStore& store) {
  if (grid.hi() > store.t_max()) throw Error(Errc::BeyondTable, "grid reaches above the zero table");
}

}  // namespace

GridScheme parse_scheme(const std::string& name) {
  if (name == "uniform") return GridScheme::Uniform;
  if (name == "stratified-jitter") return GridScheme::StratifiedJitter;
  if (name == "seeded-random") return GridScheme::SeededRandom;
  throw Error(Errc::InvalidArgument, "unknown grid scheme '" + name + "'");
}

std::string scheme_name(GridScheme scheme) {
  switch (scheme) {
    case GridScheme::Uniform:
      return "uniform";
    case GridScheme::StratifiedJitter:
      return "stratified-jitter";
    case GridScheme::SeededRandom:
      return "seeded-random";
  }
  return "?";
}

Interval parse_interval(const std::string& name) {
  if (name == "T-2T") return Interval::Doubling;
  if (name == "14-T") return Interval::FromFourteen;
  throw Error(Errc::InvalidArgument, "unknown interval '" + name + "' (T-2T or 14-T)");
}

std::string interval_name(Interval interval) { return interval == Interval::Doubling ? "T-2T" : "14-T"; }

double GridSpec::lo() const { return interval == Interval::Doubling ? T : 14.0; }
double GridSpec::hi() const { return interval == Interval::Doubling ? 2.0 * T : T; }

void GridSpec::validate() const {
  if (!std::isfinite(T) || !(T >= 14.0)) throw Error(Errc::InvalidArgument, "grid T must be >= 14");
  if (interval == Interval::FromFourteen && !(T > 14.0))
    throw Error(Errc::InvalidArgument, "the 14-T interval needs T > 14");
  if (count < 100) throw Error(Errc::InvalidArgument, "grid count must be >= 100");
  if (count > 100'000'000) throw Error(Errc::InvalidArgument, "grid count above 1e8");
}

std::vector<double> sample_grid(const GridSpec& grid, const ZeroStore* store) {
  grid.validate();
  const double a = grid.lo(), w = grid.hi() - grid.lo();
  const std::int64_t n = grid.count;
  std::vector<double> t(static_cast<std::size_t>(n));
  std::mt19937_64 rng(grid.seed);
  switch (grid.scheme) {
    case GridScheme::Uniform:
      for (std::int64_t i = 0; i < n; ++i) t[i] = a + (double(i) + 0.5) * w / double(n);
      break;
    case GridScheme::StratifiedJitter: {
      const std::int64_t strata = std::max<std::int64_t>(1, std::llround(std::sqrt(double(n))));
      const std::int64_t base = n / strata, extra = n % strata;
      std::int64_t i = 0;
      for (std::int64_t j = 0; j < strata; ++j) {
        const double lo = a + w * double(j) / double(strata);
        const double width = w / double(strata);
        const std::int64_t here = base + (j < extra ? 1 : 0);
        for (std::int64_t q = 0; q < here; ++q) t[i++] = lo + width * unit_draw(rng);
      }
      break;
    }
    case GridScheme::SeededRandom:
      for (std::int64_t i = 0; i < n; ++i) t[i] = a + w * unit_draw(rng);
      break;
  }
  std::sort(t.begin(), t.end());
  if (store) {
    for (double& x : t)
      if (const auto z = store->ordinate_near(x, kNudge)) x = z->gamma - kNudge;
  }
  return t;
}

double gaussian_tail(double v) { return 0.5 * std::erfc(v / std::sqrt(2.0)); }

MeasureEstimate make_estimate(double V, const std::vector<double>& values, double ref_gaussian) {
  MeasureEstimate e;
  e.V = V;
  e.count = static_cast<std::int64_t>(values.size());
  for (double x : values)
    if (x > V) ++e.count_exceed;
  e.fraction = e.count ? double(e.count_exceed) / double(e.count) : 0.0;
  e.std_error = e.count ? std::sqrt(e.fraction * (1.0 - e.fraction) / double(e.count)) : 0.0;
  e.ref_gaussian = ref_gaussian;
  return e;
}

void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn) {
  if (threads < 1) throw Error(Errc::InvalidArgument, "threads must be >= 1");
  const int workers = static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(n, 1)));
  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first;
  std::mutex mu;
  auto run = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < workers; ++k) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

double kahan_sum(const std::vector<double>& v) {
  double sum = 0.0, c = 0.0;
  for (double x : v) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::vector<double> log_abs_zeta_scan(const GridSpec& grid, const ZeroStore& store, int threads) {
  check_table(grid, store);
  const auto t = sample_grid(grid, &store);
  std::vector<double> out(t.size());
  parallel_for(static_cast<std::int64_t>(t.size()), threads, [&](std::int64_t i) {
    out[i] = std::log(std::abs(detail::zeta_fast(Complex(0.5, t[i]), 1e-13)));
  });
  return out;
}

MeasureEstimate measure_sigma(double V, const GridSpec& grid, const ZeroStore& store, int threads) {
  const auto values = log_abs_zeta_scan(grid, store, threads);
  const double scale = std::sqrt(0.5 * std::log(std::log(grid.T)));
  return make_estimate(V, values, gaussian_tail(V / scale));
}

std::vector<TailRow> tail_table(const std::vector<double>& Vs, const GridSpec& grid, const ZeroStore& store,
                                int threads) {
  const auto values = log_abs_zeta_scan(grid, store, threads);
  const double ll = std::log(std::log(grid.T));
  const double scale = std::sqrt(0.5 * ll);
  std::vector<TailRow> rows;
  for (double V : Vs) rows.push_back({make_estimate(V, values, gaussian_tail(V / scale)), std::exp(-V * V / ll)});
  return rows;
}

std::vector<double> residual_moduli(int m, double X, double sigma, const GridSpec& grid, const ZeroStore& store,
                                    const MangoldtSieve& sieve, const EvalPrecision& prec, int threads) {
  if (m < 0 || m > 8) throw Error(Errc::InvalidArgument, "m must be in [0, 8]");
  if (!(X >= 3.0)) throw Error(Errc::InvalidArgument, "X must be >= 3");
  if (!(sigma >= 0.5)) throw Error(Errc::InvalidArgument, "sigma must be >= 1/2");
  check_table(grid, store);
  const auto t = sample_grid(grid, &store);
  const DirichletPoly poly = DirichletPoly::plain(m, X, sieve);
  std::vector<double> out(t.size());
  parallel_for(static_cast<std::int64_t>(t.size()), threads, [&](std::int64_t i) {
    const Complex s(sigma, t[i]);
    const Complex eta = m == 0 ? log_zeta(s, store, prec) : eta_vertical(s, m, store, prec).value;
    out[i] = std::abs(eta - poly(s) - y_m(s, X, m, store));
  });
  return out;
}

MeasureEstimate measure_t_m(double V, int m, double X, const GridSpec& grid, const ZeroStore& store,
                            const MangoldtSieve& sieve, const EvalPrecision& prec, int threads) {
  const auto values = residual_moduli(m, X, 0.5, grid, store, sieve, prec, threads);
  return make_estimate(V, values, std::numeric_limits<double>::quiet_NaN());
}

double moment_bound(int m, int k, double X, double T, double sigma, double C) {
  if (m < 1) throw Error(Errc::InvalidArgument, "the moment bound needs m >= 1");
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  const double lx = std::log(X), lt = std::log(T);
  const double first = std::pow(2.0, k) * std::tgamma(k + 1.0) *
                       std::pow((2.0 * m + 1.0) / (2.0 * m) + C / lx, k) * std::pow(X, k * (1.0 - 2.0 * sigma)) /
                       std::pow(lx, 2.0 * k * m);
  const double second = std::pow(C, k) * std::pow(double(k), 2.0 * k * (m + 1)) *
                        std::pow(T, (1.0 - 2.0 * sigma) / 135.0) / std::pow(lt, 2.0 * k * m);
  return first + second;
}

MomentResult moment_residual(int m, double X, const GridSpec& grid, const ZeroStore& store,
                             const MangoldtSieve& sieve, const EvalPrecision& prec, const MomentOptions& opts,
                             int threads) {
  if (opts.k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  if (m < 1) throw Error(Errc::InvalidArgument, "moments need m >= 1");
  MomentResult res;
  const double x_max = std::pow(grid.T, 1.0 / (135.0 * opts.k));
  if (X > x_max) {
    if (!opts.waive_range)
      throw Error(Errc::HypothesisViolated,
                  "X exceeds T^(1/(135k)) = " + format_double(x_max) + "; pass the waiver to run anyway");
    res.range_waived = true;
  }
  const auto values = residual_moduli(m, X, opts.sigma, grid, store, sieve, prec, threads);
  std::vector<double> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    powers[i] = std::pow(values[i], 2.0 * opts.k);
    res.max_abs = std::max(res.max_abs, values[i]);
  }
  res.samples = static_cast<std::int64_t>(values.size());
  // (1/T) times the integral over the grid interval
  res.empirical = kahan_sum(powers) / double(values.size()) * (grid.hi() - grid.lo()) / grid.T;
  res.bound = moment_bound(m, opts.k, X, grid.T, opts.sigma, opts.C);
  return res;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_tail_csv(std::ostream& out, const std::vector<TailRow>& rows) {
  out << "V,fraction,stderr,gaussian_ref,jutila_ref\n";
  for (const auto& r : rows)
    out << format_double(r.est.V) << ',' << format_double(r.est.fraction) << ',' << format_double(r.est.std_error)
        << ',' << format_double(r.est.ref_gaussian) << ',' << format_double(r.jutila_ref) << '\n';
}

void write_estimate_csv(std::ostream& out, const std::vector<MeasureEstimate>& rows) {
  out << "V,fraction,count_exceed,count,stderr,gaussian_ref\n";
  for (const auto& r : rows)
    out << format_double(r.V) << ',' << format_double(r.fraction) << ',' << r.count_exceed << ',' << r.count << ','
        << format_double(r.std_error) << ',' << format_double(r.ref_gaussian) << '\n';
}

}  // namespace zeta_eta
