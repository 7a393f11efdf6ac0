#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zeta_eta/zero_store.hpp"
#include "zeta_eta/zeta.hpp"

using namespace zeta_eta;

namespace {
const double pi = kPi;
}

TEST_CASE("zeta at classical points") {
  CHECK(std::abs(zeta(2.0) - pi * pi / 6) < 1e-12);
  CHECK(std::abs(zeta(0.0) - Complex(-0.5, 0)) < 1e-12);
  CHECK(std::abs(zeta(-1.0) - Complex(-1.0 / 12, 0)) < 1e-12);
  CHECK(std::abs(zeta(4.0) - std::pow(pi, 4) / 90) < 1e-12);
}

TEST_CASE("zeta(1/2) against the alternating-series oracle") {
  const auto ref = oracle::zeta_borwein(0.5, 0.0);
  CHECK(std::abs(ref.real() - -1.4603545088095868) < 1e-15);
  CHECK(std::abs(zeta(0.5) - ref) < 1e-10);
  EvalPrecision tight{1e-20, 1L << 22};
  CHECK(std::abs(zeta(0.5, tight).real() - ref.real()) < 1e-15);
}

TEST_CASE("zeta off the axis matches the oracle") {
  struct P {
    double s, t;
  };
  for (P p : {P{0.5, 20.0}, P{-0.5, 3.0}, P{3.0, 40.0}, P{0.7, 45.0}, P{0.1, 7.5}, P{1.0, 1.0}}) {
    const auto ref = oracle::zeta_borwein(p.s, p.t, 160);
    CAPTURE(p.s);
    CAPTURE(p.t);
    CHECK(std::abs(zeta(Complex(p.s, p.t)) - ref) < 1e-10);
  }
  // reference values from an independent 30-digit evaluation
  CHECK(std::abs(zeta(Complex(0.5, 20)) - Complex(0.429913860437843372, -1.064291443080589113)) < 1e-10);
  CHECK(std::abs(zeta(Complex(0.7, 250)) - Complex(0.528982653042515515, 0.498051438988803598)) < 1e-10);
  CHECK(std::abs(zeta(Complex(0.5, 1000)) - Complex(0.356334367194396055, 0.931997831232993665)) < 1e-10);
}

TEST_CASE("conjugate symmetry and functional equation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> us(0.05, 0.95), ut(1.0, 80.0);
  for (int i = 0; i < 20; ++i) {
    const Complex s(us(rng), ut(rng));
    const Complex z = zeta(s);
    CHECK(std::abs(zeta(std::conj(s)) - std::conj(z)) < 1e-10);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const Complex one_minus = 1.0 - s;
    const Complex rhs = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) + log_gamma(one_minus)) *
                        std::sin(pi * s / 2.0) * zeta(one_minus);
    CHECK(std::abs(z - rhs) < 1e-9 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("pole and domain errors") {
  CHECK_THROWS_AS(zeta(1.0), Error);
  try {
    zeta(1.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleAtOne);
  }
  try {
    zeta(Complex(-2.0, 0.0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidArgument);
  }
  try {
    zeta(Complex(0.5, 1e5), EvalPrecision{1e-10, 100});
    FAIL("budget should be exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("log derivative") {
  // sigma = 3: -sum Lambda(n) n^-3 with a crude tail bound
  double sum = 0.0;
  const long n_max = 200000;
  for (long n = 2; n <= n_max; ++n) {
    const double l = oracle::mangoldt(n);
    if (l != 0.0) sum += l / std::pow(double(n), 3.0);
  }
  const double tail = 1.04 * std::log(double(n_max)) / (2.0 * double(n_max) * n_max);
  CHECK(std::abs(zeta_log_deriv(3.0).real() + sum) < tail + 1e-10);
  CHECK(std::abs(zeta_log_deriv(3.0).imag()) < 1e-14);

  // residues: pole at 1 gives -1, a simple zero gives +1
  for (double h : {1e-3, 1e-4}) CHECK(std::abs(zeta_log_deriv(Complex(1.0 + h, 0)) * h + 1.0) < 2 * h);
  const Complex rho(0.5, 14.134725141734693790);
  for (double h : {1e-3, 1e-4}) CHECK(std::abs(zeta_log_deriv(rho + Complex(h, 0)) * h - 1.0) < 2 * h);

  const Complex ref(-0.233078996833571899, 2.350745128952517582);
  CHECK(std::abs(zeta_log_deriv(Complex(0.6, 30)) - ref) < 1e-10);

  // finite difference of log zeta along sigma (principal log is fine away from the cut)
  for (double t : {5.0, 23.0, 40.0}) {
    const Complex s(0.8, t);
    const double h = 1e-5;
    const Complex fd = (std::log(zeta(s + h)) - std::log(zeta(s - h))) / (2 * h);
    CHECK(std::abs(fd - zeta_log_deriv(s)) < 1e-6);
  }
}

TEST_CASE("log derivative refuses tabulated zeros") {
  const auto store = load_zeros(ZETA_ETA_DATA_DIR "/zeros_first100.txt", ZeroFormat::Plain);
  try {
    zeta_log_deriv(Complex(0.5, 21.022040), store);
    FAIL("expected NearSingularity");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NearSingularity);
    CHECK(std::string(e.what()).find("21.02") != std::string::npos);
  }
  CHECK_THROWS_AS(zeta_log_deriv(Complex(1.0 + 1e-7, 0.0), store), Error);
}

TEST_CASE("log gamma and theta") {
  CHECK(std::abs(log_gamma(Complex(0.25, 10)) - Complex(-15.364592760295240141, 12.634193666938485786)) < 1e-12);
  CHECK(std::abs(log_gamma(Complex(3, -7)) - Complex(-5.162523220341812994, -10.116252238416788574)) < 1e-12);
  CHECK(std::abs(log_gamma(Complex(5, 0)) - std::log(24.0)) < 1e-13);
  CHECK(std::abs(riemann_siegel_theta(20.0) - 1.186894808444484045) < 1e-12);
}

TEST_CASE("Hardy Z") {
  CHECK(std::abs(hardy_z(0.0) - -1.4603545088095868) < 1e-10);
  CHECK(hardy_z(14.0) * hardy_z(14.2) < 0.0);
  CHECK(std::abs(hardy_z(50.0) - -0.340735005955024983) < 1e-10);
  // bisection of the first bracket lands on the first ordinate
  double a = 14.0, b = 14.2;
  for (int i = 0; i < 60; ++i) {
    const double m = 0.5 * (a + b);
    (hardy_z(a) * hardy_z(m) <= 0 ? b : a) = m;
  }
  CHECK(std::abs(a - 14.134725141734693) < 1e-9);

  int changes = 0;
  double prev = hardy_z(0.0);
  for (double t = 0.02; t <= 100.0; t += 0.02) {
    const double z = hardy_z(t);
    if ((z < 0) != (prev < 0)) ++changes;
    prev = z;
  }
  const auto store = load_zeros(ZETA_ETA_DATA_DIR "/zeros_first100.txt", ZeroFormat::Plain);
  CHECK(changes == 29);
  CHECK(store.count_below(100.0) == changes);
}
