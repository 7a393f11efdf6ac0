// Acceptance checks 1-10. One PASS/FAIL line per criterion; exit status 1 if any fails.
// Frozen constants come from calibrate.cpp on the calibration sets in sets.hpp (about twice
// the calibration maximum); the checks here only use the disjoint test sets.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oracles.hpp"
#include "sets.hpp"
#include "zeta_eta/approx.hpp"
#include "zeta_eta/distribution.hpp"
#include "zeta_eta/eta.hpp"
#include "zeta_eta/kernels.hpp"
#include "zeta_eta/zero_store.hpp"

using namespace zeta_eta;

namespace {

// tolerances and frozen constants
constexpr double kRvmfTol = 1e-6;
constexpr double kRvmfSeconds = 60.0;
constexpr double kRoutePrecision = 1e-9;
constexpr double kRouteSeconds = 600.0;
constexpr double kKernelTol = 1e-12;
constexpr double kMassTol = 1e-10;
constexpr double kEStarTol = 1e-10;
constexpr double kU0Frozen = 6.5;   // calibration max 3.21
constexpr double kUmFrozen = 6.0;   // calibration max 2.95 (m = 1), 1.85 (m = 2)
constexpr double kResidualFrozen = 0.45;  // calibration max 0.209 (m = 0), 0.134 (m = 1)
constexpr double kResidualPrecision = 1e-9;
constexpr double kYTol = 1e-12;
constexpr double kRelzzFrozen = 1.4;  // calibration max 0.684
constexpr double kRelzzSeconds = 300.0;
constexpr int kMomentSamples = 1000;
constexpr int kTailSamples = 10000;
constexpr double kTailFactor = 5.0;

const ZeroStore& first100() {
  static const ZeroStore s = load_zeros(ZETA_ETA_DATA_DIR "/zeros_first100.txt", ZeroFormat::Plain);
  return s;
}

const ZeroStore& to2100() {
  static const ZeroStore s = load_zeros(ZETA_ETA_DATA_DIR "/zeros_to_2100.txt", ZeroFormat::Plain);
  return s;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome zero_count() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_delta = 0.0, worst_frac = 0.0;
  int n = 0;
  for (double T : sets::uniform_heights(101, 200, 15.0, 230.0)) {
    if (std::abs(*first100().nearest_ordinate(T) - T) < 1e-3) continue;
    const auto r = rvmf_check(first100(), T);
    worst_delta = std::max(worst_delta, std::abs(r.delta));
    worst_frac = std::max(worst_frac, std::abs(r.n_rvmf - std::round(r.n_rvmf)));
    if (++n == 50) break;
  }
  const double secs = seconds_since(t0);
  return {n == 50 && worst_delta < kRvmfTol && worst_frac < kRvmfTol && secs < kRvmfSeconds,
          fmt("50 heights, max |delta| %.2e, max distance to integer %.2e, %.1f s", worst_delta, worst_frac, secs)};
}

Outcome route_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sig = sets::uniform_heights(201, 30, 0.5, 2.0);
  const auto ts = sets::uniform_heights(202, 30, 15.0, 300.0);
  int bad = 0;
  double worst = 0.0;
  for (int m : {1, 2}) {
    for (int i = 0; i < 30; ++i) {
      const Complex s(sig[i], ts[i]);
      const auto v = eta_vertical(s, m, to2100(), {kRoutePrecision});
      const auto it = eta_iterated(s, m, to2100(), {kRoutePrecision});
      const double diff = std::abs(v.value - it.value), allowed = v.est_err + it.est_err;
      worst = std::max(worst, diff / allowed);
      if (!(diff <= allowed)) {
        ++bad;
        std::printf("    m=%d s=%.6f+%.6fi diff %.3e > %.3e\n", m, s.real(), s.imag(), diff, allowed);
      }
    }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kRouteSeconds,
          fmt("60 evaluations, %g outside the combined estimate, worst diff/est_err %.3f, %.1f s", bad, worst, secs)};
}

Outcome kernel_identities() {
  double worst_v = 0.0, worst_mass = 0.0;
  for (const Kernel& k : {Kernel::poly_bump(4), Kernel::tent()}) {
    for (double H : {1.0, 2.0, 10.0}) {
      worst_v = std::max(worst_v, std::abs(v_f_H(k, H, std::exp(1.0)) - 1.0));
      worst_v = std::max(worst_v, std::abs(v_f_H(k, H, std::exp(1.0 + 1.0 / H))));
      // u lives on [e, e^{1+1/H}]; the tent has a kink at the midpoint in log scale
      auto u = [&](double x) { return u_f_H(k, H, x); };
      using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
      const double a = std::exp(1.0), mid = std::exp(1.0 + 0.5 / H), b = std::exp(1.0 + 1.0 / H);
      const double mass = GK::integrate(u, a, mid, 15, 1e-15) + GK::integrate(u, mid, b, 15, 1e-15);
      worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
    }
  }
  return {worst_v <= kKernelTol && worst_mass <= kMassTol,
          fmt("max |v - target| %.2e, max |mass - 1| %.2e", worst_v, worst_mass)};
}

Complex e1_oracle(Complex z) { return std::abs(z) < 4.0 ? oracle::e1_series(z) : oracle::e1_cf(z); }

Outcome e_star_reduction() {
  std::vector<Complex> pts;
  for (double r : {0.1, 0.7, 2.0, 5.0, 12.0})
    for (double a : {0.3, 1.2, 2.2, -2.6}) pts.push_back(std::polar(r, a));
  double w1 = 0.0, w2 = 0.0;
  for (Complex z : pts) {
    const Complex e1 = e1_oracle(z);
    w1 = std::max(w1, std::abs(e_star(0, z) - e1));
    w2 = std::max(w2, std::abs(e_star(1, z) - (std::exp(-z) - z * e1)));
  }
  return {pts.size() == 20 && w1 <= kEStarTol && w2 <= kEStarTol,
          fmt("20 points, max |E*_1 - E_1| %.2e, max |E*_2 - (e^-z - z E_1)| %.2e", w1, w2)};
}

Outcome u_m_shape() {
  const auto calib = sets::disc_points(sets::kDiscCalibSeed, sets::kDiscCalibCount);
  const auto test = sets::disc_points(sets::kDiscTestSeed, sets::kDiscTestCount);
  bool disjoint = true;
  for (Complex z : test) disjoint = disjoint && std::find(calib.begin(), calib.end(), z) == calib.end();
  const Kernel k = Kernel::poly_bump(4);
  double u0 = 0.0, um = 0.0;
  for (Complex z : test) {
    for (double H : {1.0, 2.0}) {
      u0 = std::max(u0, std::abs(u_m(k, H, 0, z) + std::log(z)));
      um = std::max({um, std::abs(u_m(k, H, 1, z)), std::abs(u_m(k, H, 2, z))});
    }
  }
  return {disjoint && u0 <= kU0Frozen && um <= kUmFrozen,
          fmt("100 test points, max |U_0 + log z| %.3f (frozen %.2f), max |U_1|,|U_2| %.3f (frozen %.2f)", u0,
              kU0Frozen, um, kUmFrozen)};
}

Outcome residual_scaling() {
  const MangoldtSieve sieve(20000);
  double lo = INFINITY, hi = 0.0;
  for (int m : {0, 1})
    for (double t : sets::kResidualTestT)
      for (double X : sets::kResidualTestX) {
        const auto r = residual(Complex(0.5, t), ApproxConfig{m, X, 1.0, Kernel::poly_bump(4)}, to2100(), sieve,
                                {kResidualPrecision});
        const double ratio = std::abs(r.r) / r.bound_esrm2;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
  return {hi <= kResidualFrozen && lo > 0.0,
          fmt("18 points, ratio in [%.4f, %.4f], frozen constant %.2f", lo, hi, kResidualFrozen)};
}

Outcome y_vanishing() {
  const ZeroStore& rh = first100();
  bool zero = true, same = true;
  for (int m : {1, 2, 3})
    for (double t : {20.0, 50.0, 101.5, 200.0}) {
      const Complex s(0.5, t);
      zero = zero && y_m(s, 10.0, m, rh) == Complex(0.0, 0.0);
      same = same && y_m(s, 3.0, m, rh) == y_m(s, 1000.0, m, rh);
    }
  const ZeroStore hyp = inject_hypothetical(rh, 0.75, 30.0);
  for (int m : {1, 2})
    for (double t : {40.0, 80.0}) same = same && y_m(Complex(0.5, t), 3.0, m, hyp) == y_m(Complex(0.5, t), 1000.0, m, hyp);
  const double err = std::abs(y_m(Complex(0.5, 40.0), 10.0, 1, hyp) - Complex(2.0 * kPi * 0.25, 0.0));
  return {zero && same && err <= kYTol,
          fmt("RH store zero: %g, X = 3 vs 1000 identical: %g, |Y_1 - pi/2| %.2e", zero, same, err)};
}

Outcome relzz_shape() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto calib = sets::uniform_heights(sets::kRelzzCalibSeed, sets::kRelzzCount, 20.0, 400.0);
  const auto test = sets::uniform_heights(sets::kRelzzTestSeed, sets::kRelzzCount, 20.0, 400.0);
  bool disjoint = true;
  for (double t : test) disjoint = disjoint && std::find(calib.begin(), calib.end(), t) == calib.end();
  const MangoldtSieve sieve(20000);
  double worst = 0.0;
  for (double t : test) {
    const double X = std::max(std::log(t), 5.0);
    const auto d = relzz_decompose(t, X, Kernel::poly_bump(4), to2100(), sieve);
    worst = std::max(worst, std::abs(d.diff) / (std::log(t) / std::log(std::log(t))));
  }
  const double secs = seconds_since(t0);
  return {disjoint && worst <= kRelzzFrozen && secs < kRelzzSeconds,
          fmt("50 heights, max |diff| loglog t / log t %.3f (frozen %.2f), %.1f s", worst, kRelzzFrozen, secs)};
}

Outcome moment_sanity() {
  const MangoldtSieve sieve(1000);
  GridSpec grid{1000.0, kMomentSamples, GridScheme::StratifiedJitter, 9, Interval::FromFourteen};
  MomentOptions opts;
  opts.waive_range = true;
  const auto a = moment_residual(1, 10.0, grid, to2100(), sieve, {1e-8}, opts);
  const auto b = moment_residual(1, 20.0, grid, to2100(), sieve, {1e-8}, opts);
  const bool ok = std::isfinite(a.empirical) && a.empirical > 0.0 && std::isfinite(b.empirical) &&
                  b.empirical > 0.0 && b.empirical < a.empirical && a.range_waived && b.range_waived;
  return {ok, fmt("X=10: %.4e, X=20: %.4e (range waived, T^(1/135) = %.3f)", a.empirical, b.empirical,
                  std::pow(1000.0, 1.0 / 135.0))};
}

Outcome distribution_harness() {
  const double T = 1000.0;
  const double scale = std::sqrt(0.5 * std::log(std::log(T)));
  const std::vector<double> Vs{0.0, 0.5 * scale, scale, 1.5 * scale, 2.0 * scale};
  GridSpec grid{T, kTailSamples, GridScheme::StratifiedJitter, 10, Interval::Doubling};
  auto csv = [&](int threads) {
    std::ostringstream out;
    write_tail_csv(out, tail_table(Vs, grid, to2100(), threads));
    return out.str();
  };
  const std::string first = csv(1), second = csv(1), threaded = csv(3);
  const auto rows = tail_table(Vs, grid, to2100());
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].est.fraction <= rows[i - 1].est.fraction;
  const double f = rows[2].est.fraction, ref = gaussian_tail(1.0);
  const bool within = f >= ref / kTailFactor && f <= ref * kTailFactor;
  return {first == second && first == threaded && monotone && within,
          fmt("byte-identical: %g, monotone: %g, fraction at V = sqrt(loglog T / 2) %.4f vs %.4f", first == threaded,
              monotone, f, ref)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"zero count vs Riemann-von Mangoldt", zero_count},
      {"eta route equivalence", route_equivalence},
      {"kernel identities", kernel_identities},
      {"E* reduction", e_star_reduction},
      {"U_m shape on the unit disc", u_m_shape},
      {"residual scaling", residual_scaling},
      {"Y_m vanishing and X-independence", y_vanishing},
      {"P_f decomposition remainder", relzz_shape},
      {"moment sanity", moment_sanity},
      {"distribution harness", distribution_harness},
  };
  int failed = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    std::printf("criterion %2d %s  %s: %s [%.1f s]\n", n, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %d criteria passed\n", n - failed, n);
  return failed ? 1 : 0;
}
