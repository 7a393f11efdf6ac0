#include "zeta_eta/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "euler_maclaurin.hpp"
#include "zeta_eta/branch_logzeta.hpp"
#include "zeta_eta/quadrature.hpp"

namespace zeta_eta {
namespace {

constexpr std::int64_t kMaxSieve = 400'000'000;

Complex i_pow(int k) {
  static const Complex table[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[((k % 4) + 4) % 4];
}

// floor(X^e) with a little slack so that X = 3, e = 2 gives 9 and not 8.
std::int64_t power_floor(double X, double e) {
  const double v = std::exp(e * std::log(X));
  return static_cast<std::int64_t>(std::floor(v * (1.0 + 1e-12)));
}

void check_sieve(std::int64_t n, const MangoldtSieve& sieve) {
  if (n > sieve.limit())
    throw Error(Errc::BeyondSieve, "n = " + std::to_string(n) + " exceeds the sieve limit " +
                                       std::to_string(sieve.limit()));
}

// log with arg in [-pi, pi)
Complex log_lower_branch(Complex z) {
  Complex l = std::log(z);
  if (l.imag() >= kPi) l.imag(-kPi);
  return l;
}

}  // namespace

MangoldtSieve::MangoldtSieve(std::int64_t limit) : limit_(limit) {
  if (limit < 1 || limit > kMaxSieve)
    throw Error(Errc::InvalidArgument, "sieve limit must be in [1, " + std::to_string(kMaxSieve) + "]");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::int64_t q = std::int64_t(p) * i;
      if (p > spf_[i] || q > limit) break;
      spf_[q] = p;
    }
  }
}

double MangoldtSieve::lambda(std::int64_t n) const {
  if (n < 1) throw Error(Errc::InvalidArgument, "von Mangoldt needs n >= 1");
  check_sieve(n, *this);
  if (n == 1) return 0.0;
  const std::int64_t p = spf_[n];
  std::int64_t r = n;
  while (r % p == 0) r /= p;
  return r == 1 ? std::log(double(p)) : 0.0;
}

bool MangoldtSieve::is_prime(std::int64_t n) const {
  if (n < 2) return false;
  check_sieve(n, *this);
  return spf_[n] == n;
}

double von_mangoldt(std::int64_t n, const MangoldtSieve& sieve) { return sieve.lambda(n); }

void ApproxConfig::validate() const {
  if (m < 0 || m > 8) throw Error(Errc::InvalidArgument, "m must be in [0, 8]");
  if (!(X >= 3.0) || !std::isfinite(X)) throw Error(Errc::InvalidArgument, "X must be >= 3");
  if (!(H >= 1.0) || !std::isfinite(H)) throw Error(Errc::InvalidArgument, "H must be >= 1");
  if (!kernel.admissible()) throw Error(Errc::InvalidFamily, "kernel " + kernel.name() + " is not admissible");
}

DirichletPoly::DirichletPoly(const ApproxConfig& cfg, const MangoldtSieve& sieve) : m_(cfg.m) {
  cfg.validate();
  const std::int64_t n_max = power_floor(cfg.X, 1.0 + 1.0 / cfg.H);
  check_sieve(n_max, sieve);
  const double log_x = std::log(cfg.X);
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const double lam = sieve.lambda(n);
    if (lam == 0.0) continue;
    const double ln = std::log(double(n));
    const double v = v_f_H(cfg.kernel, cfg.H, std::exp(ln / log_x));
    if (v == 0.0) continue;
    n_.push_back(n);
    w_.push_back(lam * v / std::pow(ln, cfg.m + 1));
  }
}

DirichletPoly DirichletPoly::plain(int m, double X, const MangoldtSieve& sieve) {
  if (m < 0 || m > 8) throw Error(Errc::InvalidArgument, "m must be in [0, 8]");
  if (!(X >= 2.0)) throw Error(Errc::InvalidArgument, "X must be >= 2");
  const std::int64_t n_max = power_floor(X, 1.0);
  check_sieve(n_max, sieve);
  DirichletPoly p;
  p.m_ = m;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const double lam = sieve.lambda(n);
    if (lam == 0.0) continue;
    p.n_.push_back(n);
    p.w_.push_back(lam / std::pow(std::log(double(n)), m + 1));
  }
  return p;
}

Complex DirichletPoly::operator()(Complex s) const {
  if (!is_finite(s)) throw Error(Errc::InvalidArgument, "s must be finite");
  long double re = 0.0L, im = 0.0L;
  for (std::size_t k = 0; k < n_.size(); ++k) {
    const Complex term = w_[k] * detail::neg_power(s, 0.0, static_cast<long>(n_[k]));
    re += term.real();
    im += term.imag();
  }
  return i_pow(m_) * Complex(double(re), double(im));
}

Complex dirichlet_poly(Complex s, const ApproxConfig& cfg, const MangoldtSieve& sieve) {
  return DirichletPoly(cfg, sieve)(s);
}

Complex y_m(Complex s, double X, int m, const ZeroStore& store) {
  if (m < 0 || m > 8) throw Error(Errc::InvalidArgument, "m must be in [0, 8]");
  if (!(X >= 3.0)) throw Error(Errc::InvalidArgument, "X must be >= 3");
  if (!is_finite(s)) throw Error(Errc::InvalidArgument, "s must be finite");
  const double t = s.imag();
  if (std::abs(t) > store.t_max()) throw Error(Errc::BeyondTable, "t above the zero table");
  if (m >= 1) return zero_sum(s, m, store);

  const double log_x = std::log(X);
  const double r = 1.0 / log_x;
  Complex sum(0.0, 0.0);
  auto add = [&](Complex rho, int mult) {
    const double d = std::abs(s - rho);
    if (d <= 1e-12) throw Error(Errc::ZeroCoincidesWithS, "s is a zero of the store");
    if (d <= r) sum += double(mult) * log_lower_branch((s - rho) * log_x);
  };
  for (const auto& z : store.in_range(t - r, t + r)) add(z.rho(), z.multiplicity);
  for (const auto& z : store.in_range(-t - r, -t + r)) add(std::conj(z.rho()), z.multiplicity);
  return sum;
}

double bound_esrm(Complex s, const ApproxConfig& cfg, const ZeroStore& store) {
  cfg.validate();
  const int d = std::min(cfg.kernel.d_smooth(), 4);
  if (d <= 0) return std::numeric_limits<double>::infinity();
  const double sigma = s.real(), t = s.imag(), X = cfg.X;
  const double log_x = std::log(X);
  auto weight = [&](double delta) {
    if (delta <= 1.0 / log_x) return log_x;
    const double q = cfg.H / (delta * log_x);
    return (q >= 1.0 ? 1.0 : std::pow(q, d)) / delta;
  };
  auto xfac = [&](double beta) { return std::pow(X, 2.0 * (beta - sigma)) + std::pow(X, beta - sigma); };

  double zeros = 0.0;
  for (const auto& z : store.records()) {
    if (z.gamma > store.t_max()) continue;
    const double a = z.multiplicity * xfac(z.beta);
    zeros += a * (weight(std::abs(t - z.gamma)) + weight(std::abs(t + z.gamma)));
  }
  // zeros above the table on the critical line, gamma = t_max / u
  const double tm = store.t_max();
  const double a_line = xfac(0.5);
  auto tail = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double g = tm / u;
    return zero_density(g) * a_line * (weight(std::abs(t - g)) + weight(t + g)) * tm / (u * u);
  };
  std::vector<double> breaks{0.0};
  if (t > tm) breaks.push_back(std::clamp(tm / t, 0.0, 1.0));
  breaks.push_back(1.0);
  std::sort(breaks.begin(), breaks.end());
  zeros += quad::integrate(tail, breaks, 1e-12, 1e-8).value;

  const double head = (std::pow(X, 2.0 * (1.0 - sigma)) + std::pow(X, 1.0 - sigma)) / (t * std::pow(log_x, cfg.m + 1));
  return head + zeros / std::pow(log_x, cfg.m + 1);
}

double bound_esrm2(Complex s, const ApproxConfig& cfg) {
  const double t = s.imag();
  if (!(t > std::exp(1.0))) throw Error(Errc::InvalidArgument, "bound_esrm2 needs t > e");
  const double log_x = std::log(cfg.X);
  return std::pow(cfg.X, 0.5 - s.real()) * std::log(t) / std::pow(log_x, cfg.m) *
         (1.0 / std::log(std::log(t)) + std::log(cfg.H + 2.0) / log_x);
}

ResidualReport residual(Complex s, const ApproxConfig& cfg, const DirichletPoly& poly, const ZeroStore& store,
                        const EvalPrecision& prec) {
  cfg.validate();
  prec.validate();
  if (!is_finite(s)) throw Error(Errc::InvalidArgument, "s must be finite");
  if (!(s.imag() >= 14.0)) throw Error(Errc::InvalidArgument, "residual needs t >= 14");
  if (!(s.real() >= 0.5)) throw Error(Errc::InvalidArgument, "residual needs sigma >= 1/2");
  ResidualReport rep;
  rep.s = s;
  rep.cfg = cfg;
  if (cfg.m == 0) {
    rep.eta = log_zeta(s, store, prec);
    rep.eta_err = prec.abs_err;
  } else {
    const auto e = eta_vertical(s, cfg.m, store, prec);
    rep.eta = e.value;
    rep.eta_err = e.est_err;
  }
  rep.poly = poly(s);
  rep.y = y_m(s, cfg.X, cfg.m, store);
  rep.r = rep.eta - rep.poly - rep.y;
  rep.bound_esrm = bound_esrm(s, cfg, store);
  const double t = s.imag();
  rep.bound_esrm2 = bound_esrm2(s, cfg);
  rep.rh_form_applies = !store.has_hypothetical() && cfg.H <= t / 2.0 && cfg.X <= t;
  rep.ratio = std::abs(rep.r) / (rep.rh_form_applies ? rep.bound_esrm2 : rep.bound_esrm);
  return rep;
}

ResidualReport residual(Complex s, const ApproxConfig& cfg, const ZeroStore& store, const MangoldtSieve& sieve,
                        const EvalPrecision& prec) {
  return residual(s, cfg, DirichletPoly(cfg, sieve), store, prec);
}

Complex p_f(Complex s, double X, const Kernel& kernel, const MangoldtSieve& sieve) {
  if (!(X >= 3.0)) throw Error(Errc::InvalidArgument, "X must be >= 3");
  if (!is_finite(s)) throw Error(Errc::InvalidArgument, "s must be finite");
  const std::int64_t n_max = power_floor(X, 2.0);
  check_sieve(n_max, sieve);
  const double log_x = std::log(X);
  long double re = 0.0L, im = 0.0L;
  for (std::int64_t p = 2; p <= n_max; ++p) {
    if (!sieve.is_prime(p)) continue;
    const double v = v_f_H(kernel, 1.0, std::exp(std::log(double(p)) / log_x));
    if (v == 0.0) continue;
    const Complex term = v * detail::neg_power(s, 0.0, static_cast<long>(p));
    re += term.real();
    im += term.imag();
  }
  return {double(re), double(im)};
}

RelzzDecomposition relzz_decompose(double t, double X, const Kernel& kernel, const ZeroStore& store,
                                   const MangoldtSieve& sieve) {
  if (!(t >= 14.0)) throw Error(Errc::InvalidArgument, "needs t >= 14");
  if (!(X >= std::log(t) && X <= t && X >= 3.0)) throw Error(Errc::InvalidArgument, "needs max(3, log t) <= X <= t");
  if (store.has_hypothetical())
    throw Error(Errc::HypothesisViolated, "the decomposition assumes every zero is on the line");
  const double log_x = std::log(X);
  const double ll = std::log(std::log(t));
  const double h_out = 1.0 / ll, h_in = 1.0 / log_x;
  if (t + h_out > store.t_max()) throw Error(Errc::BeyondTable, "window reaches above t_max");

  RelzzDecomposition out;
  out.lhs = p_f(Complex(0.5, t), X, kernel, sieve);
  out.main1 = std::log(ll / log_x) * double(count_window(store, t, h_in));
  for (const auto& z : store.in_range(t - h_out, t + h_out)) {
    const double d = std::abs(t - z.gamma);
    if (d > h_in && d <= h_out) out.main2 += z.multiplicity * std::log(d * ll);
  }
  out.diff = out.lhs - out.main1 - out.main2;
  return out;
}

double w_x(double y, double X) {
  if (!(y > 0.0)) throw Error(Errc::InvalidArgument, "w_X needs y > 0");
  if (!(X > 1.0)) throw Error(Errc::InvalidArgument, "w_X needs X > 1");
  const double log_x = std::log(X);
  const double ly = std::log(y);
  if (ly <= log_x) return 1.0;
  const double a = 3.0 * log_x - ly;  // log(X^3 / y)
  if (a <= 0.0) return 0.0;
  const double denom = 2.0 * log_x * log_x;
  if (ly <= 2.0 * log_x) {
    const double b = 2.0 * log_x - ly;  // log(X^2 / y)
    return (a * a - 2.0 * b * b) / denom;
  }
  return a * a / denom;
}

double lambda_x(std::int64_t n, double X, const MangoldtSieve& sieve) {
  return sieve.lambda(n) * w_x(double(n), X);
}

double lambda_prime_x(std::int64_t n, double X, const MangoldtSieve& sieve) {
  const double lam = sieve.lambda(n);
  const double dn = double(n);
  if (dn <= X) return lam;
  if (dn <= X * X) return lam * std::log(X * X / dn) / std::log(X);
  return 0.0;
}

}  // namespace zeta_eta
