#include "zeta_eta/zeta.hpp"

#include <cmath>
#include <sstream>

#include "euler_maclaurin.hpp"
#include "zeta_eta/zero_store.hpp"
#include "zeta_eta/zeta_ext.hpp"

namespace zeta_eta {
namespace {

// Below this target the double path cannot certify its rounding error.
constexpr double kExtendedThreshold = 5e-14;
constexpr int kMaxCorrections = 20;

void check_domain(Complex s) {
  if (!is_finite(s)) throw Error(Errc::InvalidArgument, "non-finite argument");
  if (s.real() < -1.0) throw Error(Errc::InvalidArgument, "sigma < -1 is outside the supported region");
  if (std::abs(s.imag()) > 1e6) throw Error(Errc::InvalidArgument, "|t| > 1e6 is outside the supported region");
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-12) throw Error(Errc::PoleAtOne, "s = 1");
}

}  // namespace

namespace detail {

Complex zeta_fast(Complex s, double tol) {
  check_domain(s);
  return euler_maclaurin<Complex, double, false>(s, std::max(tol, 1e-17), 1L << 24, kMaxCorrections).value;
}

ZetaWithDerivative zeta_fast_with_derivative(Complex s, double tol) {
  check_domain(s);
  const auto r = euler_maclaurin<Complex, double, true>(s, std::max(tol, 1e-17), 1L << 24, kMaxCorrections);
  return {r.value, r.deriv};
}

}  // namespace detail

Complex zeta(Complex s, const EvalPrecision& prec) {
  prec.validate();
  check_domain(s);
  if (prec.abs_err < kExtendedThreshold) {
    const ExtComplex v = zeta_ext(ExtComplex(s.real(), s.imag()), prec);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }
  return detail::euler_maclaurin<Complex, double, false>(s, prec.abs_err / 4, prec.max_terms, kMaxCorrections)
      .value;
}

ZetaWithDerivative zeta_with_derivative(Complex s, const EvalPrecision& prec) {
  prec.validate();
  check_domain(s);
  const auto r = detail::euler_maclaurin<Complex, double, true>(s, std::max(prec.abs_err / 4, 1e-17),
                                                                prec.max_terms, kMaxCorrections);
  return {r.value, r.deriv};
}

ExtComplex zeta_ext(const ExtComplex& s, const EvalPrecision& prec) {
  prec.validate();
  check_domain(Complex(static_cast<double>(s.real()), static_cast<double>(s.imag())));
  return detail::euler_maclaurin<ExtComplex, ExtReal, false>(s, ExtReal(prec.abs_err) / 4, prec.max_terms, 45)
      .value;
}

namespace {

Complex log_deriv_checked(Complex s, const EvalPrecision& prec) {
  // The ratio's error is roughly (err' + |zeta'/zeta| err) / |zeta|; tighten until it fits.
  double tol = prec.abs_err / 10;
  for (int pass = 0; pass < 3; ++pass) {
    const auto r = detail::euler_maclaurin<Complex, double, true>(s, std::max(tol, 1e-17), prec.max_terms,
                                                                  kMaxCorrections);
    if (std::abs(r.value) <= prec.abs_err)
      throw Error(Errc::NearSingularity, "|zeta(s)| is below the requested accuracy");
    const Complex ratio = r.deriv / r.value;
    const double needed = prec.abs_err * std::abs(r.value) / (2.0 * (1.0 + std::abs(ratio)));
    if (needed >= tol || tol <= 1e-17) return ratio;
    tol = needed;
  }
  const auto r = detail::euler_maclaurin<Complex, double, true>(s, 1e-17, prec.max_terms, kMaxCorrections);
  return r.deriv / r.value;
}

}  // namespace

Complex zeta_log_deriv(Complex s, const EvalPrecision& prec) {
  prec.validate();
  check_domain(s);
  if (std::abs(s - 1.0) < std::sqrt(prec.abs_err))
    throw Error(Errc::NearSingularity, "within sqrt(abs_err) of the pole at s = 1");
  return log_deriv_checked(s, prec);
}

Complex zeta_log_deriv(Complex s, const ZeroStore& store, const EvalPrecision& prec) {
  prec.validate();
  check_domain(s);
  const double radius = std::sqrt(prec.abs_err);
  if (std::abs(s - 1.0) < radius) throw Error(Errc::NearSingularity, "within sqrt(abs_err) of the pole at s = 1");
  for (const auto& z : store.in_range(std::abs(s.imag()) - radius, std::abs(s.imag()) + radius)) {
    if (z.hypothetical) continue;
    const Complex rho(z.beta, s.imag() >= 0 ? z.gamma : -z.gamma);
    if (std::abs(s - rho) < radius) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "within sqrt(abs_err) of the zero " << z.beta << " + i" << rho.imag();
      throw Error(Errc::NearSingularity, msg.str());
    }
  }
  return log_deriv_checked(s, prec);
}

Complex log_gamma(Complex z) {
  if (!(z.real() > 0.0)) throw Error(Errc::InvalidArgument, "log_gamma needs Re z > 0");
  // Shift up until Stirling's series is accurate to double precision, summing logs
  // term by term so the imaginary part stays continuous.
  Complex shift_sum(0.0, 0.0);
  while (std::abs(z) < 15.0) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  static const double kCoef[] = {1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,    -1.0 / 1680.0,
                                 1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,     -3617.0 / 122400.0};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series(0.0, 0.0);
  Complex p = inv;
  for (double c : kCoef) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift_sum;
}

double riemann_siegel_theta(double t) {
  if (t == 0.0) return 0.0;
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t, const EvalPrecision& prec) {
  if (!(t >= 0.0)) throw Error(Errc::InvalidArgument, "hardy_z needs t >= 0");
  const Complex z = zeta(Complex(0.5, t), prec);
  const double th = riemann_siegel_theta(t);
  return (std::polar(1.0, th) * z).real();
}

}  // namespace zeta_eta
