#pragma once

// Empirical value distribution on t-grids: exceedance fractions for log|zeta(1/2+it)| and for
// the eta_m residual against the plain prime sum, residual moments, and tail tables.
// Samples are evaluated in parallel but always aggregated in index order, so results do
// not depend on the thread count.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "zeta_eta/approx.hpp"
#include "zeta_eta/types.hpp"
#include "zeta_eta/zero_store.hpp"

namespace zeta_eta {

enum class GridScheme { Uniform, StratifiedJitter, SeededRandom };
/// [T, 2T] as in the exceedance sets, or [14, T] as in the moment integral.
enum class Interval { Doubling, FromFourteen };

GridScheme parse_scheme(const std::string& name);
std::string scheme_name(GridScheme scheme);
Interval parse_interval(const std::string& name);
std::string interval_name(Interval interval);

struct GridSpec {
  double T = 1000.0;
  std::int64_t count = 10000;
  GridScheme scheme = GridScheme::StratifiedJitter;
  std::uint64_t seed = 0;
  Interval interval = Interval::Doubling;

  double lo() const;
  double hi() const;
  /// count >= 100, T finite and large enough for the interval.
  void validate() const;
};

/// Deterministic sample heights in [lo, hi], ascending. Stratified jitter uses round(sqrt(count))
/// equal strata. Samples within 1e-6 of a tabulated ordinate are moved to gamma - 1e-6.
std::vector<double> sample_grid(const GridSpec& grid, const ZeroStore* store = nullptr);

/// Standard normal upper tail.
double gaussian_tail(double v);

struct MeasureEstimate {
  double V = 0.0;
  double fraction = 0.0;
  std::int64_t count_exceed = 0;
  std::int64_t count = 0;
  /// Gaussian reference for the same threshold; NaN where none applies.
  double ref_gaussian = 0.0;
  /// Binomial standard error sqrt(f(1-f)/n).
  double std_error = 0.0;
};

MeasureEstimate make_estimate(double V, const std::vector<double>& values, double ref_gaussian);

/// log|zeta(1/2 + it)| at the grid samples. Needs the upper end of the grid <= t_max.
std::vector<double> log_abs_zeta_scan(const GridSpec& grid, const ZeroStore& store, int threads = 1);

/// Fraction of samples with log|zeta(1/2+it)| > V, against the tail of N(0, loglog T / 2).
MeasureEstimate measure_sigma(double V, const GridSpec& grid, const ZeroStore& store, int threads = 1);

struct TailRow {
  MeasureEstimate est;
  double jutila_ref = 0.0;  // exp(-V^2 / loglog T)
};

std::vector<TailRow> tail_table(const std::vector<double>& Vs, const GridSpec& grid, const ZeroStore& store,
                                int threads = 1);

/// |eta_m(s) - i^m sum_{n <= X} Lambda(n) / (n^s (log n)^{m+1}) - Y_m(s)| at s = sigma + it
/// for every grid sample; eta_m from the vertical route, m >= 1.
std::vector<double> residual_moduli(int m, double X, double sigma, const GridSpec& grid, const ZeroStore& store,
                                    const MangoldtSieve& sieve, const EvalPrecision& prec, int threads = 1);

MeasureEstimate measure_t_m(double V, int m, double X, const GridSpec& grid, const ZeroStore& store,
                            const MangoldtSieve& sieve, const EvalPrecision& prec, int threads = 1);

struct MomentOptions {
  int k = 1;
  double sigma = 0.5;
  /// Trial value for the unspecified absolute constant.
  double C = 10.0;
  /// Run even when X > T^{1/(135k)}; the result records that the range was waived.
  bool waive_range = false;
};

struct MomentResult {
  double empirical = 0.0;
  double bound = 0.0;
  double max_abs = 0.0;
  std::int64_t samples = 0;
  bool range_waived = false;
};

/// Grid mean of |residual|^{2k} and the bound shape with constant opts.C.
/// HypothesisViolated when X > T^{1/(135k)} unless opts.waive_range.
MomentResult moment_residual(int m, double X, const GridSpec& grid, const ZeroStore& store,
                             const MangoldtSieve& sieve, const EvalPrecision& prec, const MomentOptions& opts,
                             int threads = 1);
double moment_bound(int m, int k, double X, double T, double sigma, double C);

/// Compensated sum in index order.
double kahan_sum(const std::vector<double>& v);

/// Runs fn(i) for i in [0, n) on up to `threads` workers; rethrows the first failure.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn);

/// CSV writers. Numbers use 17 significant digits so equal runs give equal bytes.
void write_tail_csv(std::ostream& out, const std::vector<TailRow>& rows);
void write_estimate_csv(std::ostream& out, const std::vector<MeasureEstimate>& rows);
std::string format_double(double x);

}  // namespace zeta_eta
