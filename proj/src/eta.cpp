#include "zeta_eta/eta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/factorials.hpp>

#include "zeta_eta/branch_logzeta.hpp"
#include "zeta_eta/quadrature.hpp"
#include "zeta_eta/zeta.hpp"

namespace zeta_eta {
namespace {

constexpr double kVerticalSpan = 45.0;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kNear = 1e-5;

struct LocalModel {
  bool active = false;
  int order = 0;
  Complex zs;     // safe point minus the singular point
  Complex base;   // log zeta at the safe point
  Complex slope;  // derivative of log(zeta(s) / (s - rho)^order) there
};

double factorial(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

void check_m(int m, int lo) {
  if (m < lo) throw Error(Errc::InvalidArgument, "m must be >= " + std::to_string(lo));
  if (m > 8) throw Error(Errc::InvalidArgument, "m > 8 is not supported");
}

double zeta_tol(const EvalPrecision& prec) { return std::clamp(0.1 * prec.abs_err, 1e-16, 1e-15); }

// log zeta(a + it) for a >= sigma on one horizontal line, sharing tracker state across calls.
class HorizontalLine {
 public:
  HorizontalLine(double t, const ZeroStore& store, const EvalPrecision& prec)
      : t_(t), tol_(zeta_tol(prec)), tracker_(detail::horizontal_tracker(t, &store, tol_)) {}

  Complex operator()(double a) {
    if (a >= 2.0) return std::log(detail::zeta_fast(Complex(a, t_), tol_));
    return tracker_.at(a);
  }

 private:
  double t_;
  double tol_;
  detail::PathTracker tracker_;
};

void check_vertical_domain(Complex s, double t, const ZeroStore& store) {
  if (!is_finite(s)) throw Error(Errc::InvalidArgument, "non-finite argument");
  if (s.real() < -1.0) throw Error(Errc::InvalidArgument, "sigma must be >= -1");
  if (!(t > 0.0)) throw Error(Errc::InvalidArgument, "t must be > 0");
  if (s.real() < 1.0 && t > store.t_max()) throw Error(Errc::BeyondTable, "t above the zero table");
}

}  // namespace

double vertical_tail_bound(double sigma, double A, int m) {
  // |log zeta(a + it)| <= zeta(a) - 1 <= 2^{-a} (1 + 2/(a - 1))
  const double c = 1.0 + 2.0 / (A - 1.0);
  const int k = m - 1;
  double acc = 0.0;
  for (int j = 0; j <= k; ++j)
    acc += factorial(k) / factorial(k - j) * std::pow(A - sigma, k - j) / std::pow(kLn2, j + 1);
  return c * std::exp(-kLn2 * A) * acc;
}

namespace {

// integral_lo^hi (a - sigma)^{m-1} log|a - 1| da in closed form
double log_pole_moment(double sigma, double lo, double hi, int m) {
  auto F = [](double x, int j) {
    if (x == 0.0) return 0.0;
    return std::pow(x, j + 1) * (std::log(std::abs(x)) - 1.0 / (j + 1)) / (j + 1);
  };
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double binom = factorial(m - 1) / (factorial(j) * factorial(m - 1 - j));
    acc += binom * std::pow(1.0 - sigma, m - 1 - j) * (F(hi - 1.0, j) - F(lo - 1.0, j));
  }
  return acc;
}

}  // namespace

Complex c_m(double sigma, int m, const EvalPrecision& prec) {
  prec.validate();
  check_m(m, 1);
  if (!(sigma >= -1.0) || !std::isfinite(sigma)) throw Error(Errc::InvalidArgument, "sigma must be >= -1");
  const double tol = prec.abs_err / 10;
  const double ztol = zeta_tol(prec);
  double A = std::max(sigma, 1.0) + 4.0;
  while (vertical_tail_bound(sigma, A, m) > tol) A += 2.0;

  double total = 0.0;
  if (sigma < 2.0) {
    // log|zeta(a)| = log((a - 1) zeta(a)) - log|a - 1|; the first piece is smooth through a = 1
    auto smooth = [&](double a) {
      const double x = a - 1.0;
      const double reg = std::abs(x) < 1e-8 ? 0.57721566490153286 * x
                                            : std::log(x * detail::zeta_fast(Complex(a, 0.0), ztol).real());
      return std::pow(a - sigma, m - 1) * reg;
    };
    std::vector<double> breaks{sigma};
    if (sigma < 1.0) breaks.push_back(1.0);
    breaks.push_back(2.0);
    const auto q = quad::integrate(smooth, breaks, 0.5 * tol, 0.0, 2000000);
    if (!q.converged) throw Error(Errc::BudgetExceeded, "c_m quadrature did not converge");
    total += q.value - log_pole_moment(sigma, sigma, 2.0, m);
  }
  auto f = [&](double a) {
    return std::pow(a - sigma, m - 1) * std::log(detail::zeta_fast(Complex(a, 0.0), ztol).real());
  };
  std::vector<double> breaks{std::max(sigma, 2.0)};
  for (double b = 2.0 * breaks.back(); b < A; b *= 2.0) breaks.push_back(b);
  breaks.push_back(A);
  const auto q = quad::integrate(f, breaks, 0.5 * tol, 0.0, 2000000);
  if (!q.converged) throw Error(Errc::BudgetExceeded, "c_m quadrature did not converge");
  total += q.value;
  const double imag = sigma < 1.0 ? -kPi * std::pow(1.0 - sigma, m) / m : 0.0;
  return i_pow(m) / factorial(m - 1) * Complex(total, imag);
}

Complex zero_sum(Complex s, int m, const ZeroStore& store) {
  check_m(m, 1);
  const double sigma = s.real();
  const double t = s.imag();
  Complex acc(0.0, 0.0);
  for (const auto& r : store.records()) {
    if (!(r.gamma < t)) break;
    if (!(r.beta > sigma)) continue;
    for (int k = 0; k < m; ++k)
      acc += i_pow(m - 1 - k) / (factorial(m - k) * factorial(k)) * double(r.multiplicity) *
             std::pow(r.beta - sigma, m - k) * std::pow(t - r.gamma, k);
  }
  return 2.0 * kPi * acc;
}

EtaValue eta_vertical(Complex s, int m, const ZeroStore& store, const EvalPrecision& prec) {
  prec.validate();
  check_m(m, 1);
  const double t = detail::effective_height(s.imag(), &store);
  check_vertical_domain(s, t, store);
  const double sigma = s.real();
  const double tol = prec.abs_err / 10;

  HorizontalLine line(t, store, prec);
  auto f = [&](double a) { return std::pow(a - sigma, m - 1) * line(a); };
  const double top = sigma + kVerticalSpan;
  std::vector<double> breaks{sigma};
  // zeros sitting just above the line leave a log singularity at a = beta
  for (const auto& r : store.in_range(t - 1e-6, t + 1e-6))
    if (!r.hypothetical && r.beta > sigma && r.beta < 2.0) breaks.push_back(r.beta);
  for (double b : {2.0, 4.0, 8.0, 16.0})
    if (b > breaks.back() && b < top) breaks.push_back(b);
  breaks.push_back(top);
  const auto q = quad::integrate_smoothed_ends(f, breaks, tol, 0.0, 2000000);
  if (!q.converged) throw Error(Errc::BudgetExceeded, "vertical integral did not converge");

  EtaValue out;
  out.s = s;
  out.m = m;
  out.route = EtaRoute::Vertical;
  out.integral_part = i_pow(m) / factorial(m - 1) * q.value;
  out.zero_sum_part = zero_sum(Complex(sigma, t), m, store);
  out.value = out.integral_part + out.zero_sum_part;
  out.est_err = (q.abs_error + vertical_tail_bound(sigma, top, m)) / factorial(m - 1) + 1e-13;
  return out;
}

EtaValue eta_iterated(Complex s, int m, const ZeroStore& store, const EvalPrecision& prec) {
  prec.validate();
  check_m(m, 0);
  EtaValue out;
  out.s = s;
  out.m = m;
  out.route = EtaRoute::Iterated;
  if (m == 0) {
    out.value = log_zeta(s, store, prec);
    out.est_err = prec.abs_err;
    return out;
  }
  if (!is_finite(s) || s.real() < -1.0) throw Error(Errc::InvalidArgument, "sigma must be >= -1");
  if (s.imag() < 0.0) throw Error(Errc::InvalidArgument, "eta_iterated needs t >= 0");
  const double sigma = s.real();
  if (s.imag() == 0.0) {
    out.value = c_m(sigma, m, prec);
    out.est_err = prec.abs_err;
    return out;
  }
  const double t = detail::effective_height(s.imag(), &store);
  if (sigma < 1.0 && t > store.t_max()) throw Error(Errc::BeyondTable, "t above the zero table");

  // Panels end at every zero ordinate below t; each panel is anchored at its midpoint by
  // horizontal continuation and then followed vertically.
  std::vector<double> breaks{0.0};
  for (const auto& r : store.in_range(0.0, t))
    if (!r.hypothetical && r.gamma < t && r.gamma > breaks.back()) breaks.push_back(r.gamma);
  breaks.push_back(t);
  const std::size_t panels = breaks.size() - 1;
  const double tol = prec.abs_err / (10.0 * double(panels));
  const double ztol = 1e-16;

  Complex integral(0.0, 0.0);
  double err = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    const double mid = 0.5 * (a + b);
    const Complex anchor = log_zeta(Complex(sigma, mid), store, prec);
    detail::PathTracker vertical(Complex(sigma, 0.0), Complex(0.0, 1.0), mid, anchor,
                                 [&store](Complex z) { return detail::distance_to_singular(z, &store); }, ztol);
    // Within kNear of a zero at a panel end, log zeta is carried over from a safe point by
    // order * log(s - rho) plus a first-order term for the regular factor. The offset from
    // the end is exact, so log|s - rho| does not inherit the rounding of u.
    std::array<LocalModel, 2> local;
    for (int e = 0; e < 2; ++e) {
      const double end_u = e == 0 ? a : b;
      const auto sp = detail::nearest_singular(Complex(sigma, end_u), &store);
      if (sp.where.imag() != end_u || std::abs(sigma - sp.where.real()) >= kNear) continue;
      const double u_safe = end_u + (e == 0 ? kNear : -kNear);
      const Complex zs(sigma - sp.where.real(), u_safe - end_u);
      const auto zd = detail::zeta_fast_with_derivative(Complex(sigma, u_safe), ztol);
      local[e] = {true, sp.order, zs, vertical.at(u_safe), zd.derivative / zd.value - double(sp.order) / zs};
    }
    auto f = [&](double u, double off) {
      const LocalModel& lm = local[std::signbit(off) ? 1 : 0];
      Complex v;
      if (lm.active && std::abs(off) < kNear) {
        const Complex z(lm.zs.real(), off);
        if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);  // the weight vanishes there
        v = lm.base + double(lm.order) * std::log(z / lm.zs) + lm.slope * (z - lm.zs);
      } else {
        v = vertical.at(std::clamp(u, a, b));
      }
      return std::pow(t - u, m - 1) * v;
    };
    const double floor_tol = 5e-15 * (b - a) * std::pow(t, m - 1);
    const auto q = quad::integrate_panel_offsets(f, a, b, std::max(tol, floor_tol), 0.0, 20000);
    if (!q.converged && q.abs_error > std::max(1e4 * tol, 1e-6))
      throw Error(Errc::BudgetExceeded, "panel quadrature did not converge");
    integral += q.value;
    err += q.abs_error;
  }
  Complex value = integral / factorial(m - 1);
  err /= factorial(m - 1);
  for (int j = 0; j < m; ++j) {
    const double w = std::pow(t, j) / factorial(j);
    EvalPrecision cp = prec;
    cp.abs_err = std::max(prec.abs_err / (10.0 * m * w), 1e-14);
    value += c_m(sigma, m - j, cp) * w;
    err += cp.abs_err * w;
  }
  out.value = value;
  out.est_err = err + 1e-13;
  return out;
}

double s_m(double t, int m, const ZeroStore& store, const EvalPrecision& prec) {
  check_m(m, 0);
  if (!(t >= 0.0)) throw Error(Errc::InvalidArgument, "t must be >= 0");
  if (m == 0) return big_s(t, store, prec);
  if (t == 0.0) return c_m(0.5, m, prec).imag() / kPi;
  return eta_vertical(Complex(0.5, t), m, store, prec).value.imag() / kPi;
}

}  // namespace zeta_eta
