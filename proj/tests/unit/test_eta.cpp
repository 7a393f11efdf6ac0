#include <chrono>
#include <cmath>
#include <random>

#include "doctest.h"
#include "zeta_eta/branch_logzeta.hpp"
#include "zeta_eta/eta.hpp"
#include "zeta_eta/quadrature.hpp"
#include "zeta_eta/zeta.hpp"

using namespace zeta_eta;

namespace {
const ZeroStore& store() {
  static const ZeroStore s = load_zeros(ZETA_ETA_DATA_DIR "/zeros_first100.txt", ZeroFormat::Plain);
  return s;
}

// independent check of c_1(2): plain GK on log zeta(a) with the Dirichlet tail bound
double c1_at_2_oracle() {
  auto f = [](double a) { return std::log(zeta(Complex(a, 0.0), {1e-14}).real()); };
  const double head = quad::integrate(f, 2.0, 60.0, 1e-14).value;
  return head;  // tail beyond 60 is below 2^-59
}
}  // namespace

TEST_CASE("c_m signs and values") {
  for (double sigma : {1.0, 1.5, 3.0}) {
    const Complex c1 = c_m(sigma, 1);
    CHECK(c1.real() == 0.0);
    CHECK(c1.imag() > 0.0);
  }
  const Complex c2 = c_m(2.0, 2);
  CHECK(c2.real() < 0.0);
  CHECK(c2.imag() == 0.0);
  CHECK(std::abs(c_m(2.0, 1).imag() - c1_at_2_oracle()) < 1e-10);
  // below 1 the t -> 0+ branch contributes -i pi (1 - sigma)^m / m before the i^m factor
  const Complex c1h = c_m(0.5, 1);
  CHECK(std::abs(c1h.real() - kPi * 0.5) < 1e-12);
}

TEST_CASE("vertical route examples") {
  const auto v = eta_vertical(Complex(2.0, 20.0), 1, store());
  CHECK(v.zero_sum_part == Complex(0.0, 0.0));
  auto f = [](double a) { return log_zeta(Complex(a, 20.0)); };
  const auto q = quad::integrate(f, 2.0, 47.0, 1e-13);
  CHECK(std::abs(v.value - Complex(0, 1) * q.value) < 1e-10);

  const auto h = eta_vertical(Complex(0.5, 40.0), 1, store());
  CHECK(h.zero_sum_part == Complex(0.0, 0.0));

  const auto hyp = inject_hypothetical(store(), 0.75, 30.0);
  const auto a = eta_vertical(Complex(0.6, 40.0), 1, store());
  const auto b = eta_vertical(Complex(0.6, 40.0), 1, hyp);
  CHECK(std::abs(b.zero_sum_part - Complex(0.3 * kPi, 0.0)) < 1e-12);
  CHECK(std::abs((b.value - a.value) - Complex(0.3 * kPi, 0.0)) < 1e-12);
}

TEST_CASE("iterated route base cases") {
  const Complex s(0.7, 33.0);
  CHECK(eta_iterated(s, 0, store()).value == log_zeta(s, store()));
  CHECK(eta_iterated(Complex(1.5, 0.0), 2, store()).value == c_m(1.5, 2));
}

TEST_CASE("routes agree") {
  struct P {
    double sigma, t;
    int m;
  };
  const EvalPrecision prec{1e-9};
  for (P p : {P{2.0, 20.0, 1}, P{0.5, 20.0, 1}, P{0.8, 47.5, 2}, P{0.5, 60.0, 2}, P{1.2, 33.3, 1}}) {
    const Complex s(p.sigma, p.t);
    const auto start = std::chrono::steady_clock::now();
    const auto v = eta_vertical(s, p.m, store(), prec);
    const auto i = eta_iterated(s, p.m, store(), prec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CAPTURE(p.sigma);
    CAPTURE(p.t);
    CAPTURE(p.m);
    CAPTURE(secs);
    CAPTURE(v.est_err);
    CAPTURE(i.est_err);
    CHECK(std::abs(v.value - i.value) <= v.est_err + i.est_err);
  }
}

TEST_CASE("S_m") {
  CHECK(s_m(37.0, 0, store()) == big_s(37.0, store()));
  // S_1 is continuous across an ordinate
  const double g = store().records()[4].gamma;
  CHECK(std::abs(s_m(g - 1e-5, 1, store()) - s_m(g + 1e-5, 1, store())) < 1e-4);
  for (double t : {25.0, 80.0, 150.0}) CHECK(std::abs(s_m(t, 1, store())) < std::log(t));
}

TEST_CASE("ordinate offset and errors") {
  const double g = store().records()[2].gamma;
  const auto on = eta_vertical(Complex(0.5, g), 1, store());
  const auto below = eta_vertical(Complex(0.5, g - 1e-9), 1, store());
  CHECK(std::abs(on.value - below.value) < 1e-8);
  CHECK_THROWS_AS(eta_vertical(Complex(0.5, 300.0), 1, store()), Error);
  CHECK_THROWS_AS(eta_vertical(Complex(0.5, 20.0), 0, store()), Error);
  CHECK_THROWS_AS(c_m(2.0, 0), Error);
}
