#include "zeta_eta/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "zeta_eta/quadrature.hpp"

namespace zeta_eta {
namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;
constexpr int kCustomPanels = 1024;

double factorial(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

void check_H(double H) {
  if (!(H >= 1.0) || !std::isfinite(H)) throw Error(Errc::InvalidArgument, "H must be >= 1");
}

}  // namespace

Kernel Kernel::poly_bump(int d) {
  if (d < 1 || d > 16) throw Error(Errc::InvalidFamily, "poly_bump needs 1 <= d <= 16");
  Kernel k;
  k.family_ = KernelFamily::PolyBump;
  k.name_ = "poly_bump(" + std::to_string(d) + ")";
  k.degree_ = d;
  // C^{d-1}(R) and smooth on [0, 1]
  k.d_smooth_ = d + 1;
  k.scale_ = factorial(2 * d + 1) / (factorial(d) * factorial(d));
  return k;
}

Kernel Kernel::tent() {
  Kernel k;
  k.family_ = KernelFamily::Tent;
  k.name_ = "tent";
  k.d_smooth_ = 0;
  return k;
}

Kernel Kernel::custom(std::function<double(double)> f, int d_smooth, std::string name) {
  if (!f) throw Error(Errc::InvalidFamily, "custom kernel needs a function");
  if (d_smooth < 0) throw Error(Errc::InvalidArgument, "d_smooth must be >= 0");
  for (int i = 0; i <= 1000; ++i) {
    const double v = f(i / 1000.0);
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(Errc::InvalidArgument, "kernel must be finite and nonnegative");
  }
  Kernel k;
  k.family_ = KernelFamily::Custom;
  k.name_ = std::move(name);
  k.d_smooth_ = d_smooth;
  k.fn_ = std::move(f);
  auto grid = std::make_shared<std::vector<double>>(kCustomPanels + 1, 0.0);
  for (int i = 0; i < kCustomPanels; ++i) {
    const double a = double(i) / kCustomPanels, b = double(i + 1) / kCustomPanels;
    (*grid)[i + 1] = (*grid)[i] + quad::integrate(k.fn_, a, b, 1e-16, 1e-14).value;
  }
  const double mass = grid->back();
  if (!(mass > 0.0)) throw Error(Errc::InvalidArgument, "kernel has zero mass");
  for (auto& v : *grid) v /= mass;
  k.scale_ = 1.0 / mass;
  k.cdf_grid_ = grid;
  return k;
}

Kernel Kernel::from_table(std::vector<double> samples) {
  if (samples.size() < 2) throw Error(Errc::InvalidArgument, "kernel table needs at least two samples");
  double mass = 0.0;
  const double h = 1.0 / double(samples.size() - 1);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (!(samples[i] >= 0.0) || !(samples[i + 1] >= 0.0))
      throw Error(Errc::InvalidArgument, "kernel samples must be nonnegative");
    mass += 0.5 * h * (samples[i] + samples[i + 1]);
  }
  if (!(mass > 0.0)) throw Error(Errc::InvalidArgument, "kernel has zero mass");
  for (auto& v : samples) v /= mass;
  Kernel k;
  k.family_ = KernelFamily::Custom;
  k.name_ = "table(" + std::to_string(samples.size()) + ")";
  k.d_smooth_ = 0;
  k.table_ = std::move(samples);
  return k;
}

double Kernel::f(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) return 0.0;
  switch (family_) {
    case KernelFamily::PolyBump:
      return std::pow(x * (1.0 - x), degree_) * scale_;
    case KernelFamily::Tent:
      return 4.0 * std::min(x, 1.0 - x);
    case KernelFamily::Custom:
      break;
  }
  if (!table_.empty()) {
    const double pos = x * double(table_.size() - 1);
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(pos), table_.size() - 2);
    const double w = pos - double(i);
    return (1.0 - w) * table_[i] + w * table_[i + 1];
  }
  return fn_(x) * scale_;
}

double Kernel::derivative(int k, double x) const {
  if (k < 0 || k > kSmoothnessCap) throw Error(Errc::InvalidArgument, "derivative order out of range");
  if (k == 0) return f(x);
  if (!(x >= 0.0 && x <= 1.0)) return 0.0;
  switch (family_) {
    case KernelFamily::PolyBump:
    {
      // Leibniz rule on x^d (1-x)^d
      const int d = degree_;
      double acc = 0.0;
      for (int j = std::max(0, k - d); j <= std::min(k, d); ++j) {
        const double left = factorial(d) / factorial(d - j) * std::pow(x, d - j);
        const double right = factorial(d) / factorial(d - k + j) * std::pow(1.0 - x, d - k + j);
        acc += boost::math::binomial_coefficient<double>(k, j) * left * right * ((k - j) % 2 ? -1.0 : 1.0);
      }
      return acc * scale_;
    }
    case KernelFamily::Tent:
      return k == 1 ? (x < 0.5 ? 4.0 : -4.0) : 0.0;
    case KernelFamily::Custom:
      break;
  }
  if (!table_.empty()) {
    if (k > 1) return 0.0;
    const double h = 1.0 / double(table_.size() - 1);
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(x / h), table_.size() - 2);
    return (table_[i + 1] - table_[i]) / h;
  }
  // one-sided k-th difference staying inside [0, 1]
  const double h = std::pow(1e-16, 1.0 / (k + 2));
  const double start = std::clamp(x - 0.5 * k * h, 0.0, 1.0 - k * h);
  double acc = 0.0;
  for (int j = 0; j <= k; ++j)
    acc += boost::math::binomial_coefficient<double>(k, j) * ((k - j) % 2 ? -1.0 : 1.0) * f(start + j * h);
  return acc / std::pow(h, k);
}

double Kernel::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  switch (family_) {
    case KernelFamily::PolyBump:
      return boost::math::ibeta(degree_ + 1, degree_ + 1, x);
    case KernelFamily::Tent:
      return x <= 0.5 ? 2.0 * x * x : 1.0 - 2.0 * (1.0 - x) * (1.0 - x);
    case KernelFamily::Custom:
      break;
  }
  if (!table_.empty()) {
    const double h = 1.0 / double(table_.size() - 1);
    double acc = 0.0;
    std::size_t i = 0;
    for (; (i + 1) * h <= x && i + 1 < table_.size(); ++i) acc += 0.5 * h * (table_[i] + table_[i + 1]);
    if (i + 1 < table_.size()) {
      const double w = x - i * h;
      acc += w * (table_[i] + 0.5 * w * (table_[i + 1] - table_[i]) / h);
    }
    return std::min(acc, 1.0);
  }
  const auto i = std::min(static_cast<int>(x * kCustomPanels), kCustomPanels - 1);
  const double a = double(i) / kCustomPanels;
  auto g = [this](double y) { return f(y); };
  return std::min(1.0, (*cdf_grid_)[i] + quad::integrate(g, a, x, 1e-16, 1e-14).value);
}

Kernel make_kernel(KernelFamily family, int d) {
  switch (family) {
    case KernelFamily::PolyBump:
      return Kernel::poly_bump(d);
    case KernelFamily::Tent:
      return Kernel::tent();
    case KernelFamily::Custom:
      break;
  }
  throw Error(Errc::InvalidFamily, "custom kernels are built from a function or a table");
}

KernelFamily parse_family(const std::string& name) {
  if (name == "poly_bump" || name == "poly-bump") return KernelFamily::PolyBump;
  if (name == "tent") return KernelFamily::Tent;
  if (name == "custom") return KernelFamily::Custom;
  throw Error(Errc::InvalidFamily, "unknown kernel family '" + name + "'");
}

std::string family_name(KernelFamily family) {
  switch (family) {
    case KernelFamily::PolyBump:
      return "poly_bump";
    case KernelFamily::Tent:
      return "tent";
    case KernelFamily::Custom:
      return "custom";
  }
  return "?";
}

int smoothness_on_line(const Kernel& k, double tol) {
  for (int j = 0; j <= kSmoothnessCap; ++j) {
    double scale = 1.0;
    for (int i = 0; i <= 100; ++i) scale = std::max(scale, std::abs(k.derivative(j, i / 100.0)));
    const double lo = std::abs(k.derivative(j, 0.0));
    const double hi = std::abs(k.derivative(j, 1.0));
    if (lo > tol * scale || hi > tol * scale) return j - 1;
  }
  return kSmoothnessCap;
}

double u_f_H(const Kernel& k, double H, double x) {
  check_H(H);
  if (!(x > 0.0)) throw Error(Errc::InvalidArgument, "u_f_H needs x > 0");
  return H * k.f(H * (std::log(x) - 1.0)) / x;
}

double v_f_H(const Kernel& k, double H, double y) {
  check_H(H);
  if (!(y > 0.0)) throw Error(Errc::InvalidArgument, "v_f_H needs y > 0");
  return 1.0 - k.cdf(H * (std::log(y) - 1.0));
}

Complex exp_integral_e1(Complex z) {
  if (z == Complex(0.0, 0.0)) throw Error(Errc::InvalidArgument, "E_1 is singular at 0");
  return detail::e_star_signed(0, z, 1e-15);
}

namespace detail {

Complex e_star_signed(int m, Complex z, double abs_tol) {
  if (m < 0) throw Error(Errc::InvalidArgument, "m must be >= 0");
  if (z == Complex(0.0, 0.0)) {
    if (m == 0) throw Error(Errc::InvalidArgument, "E*_1 is singular at 0");
    return factorial(m - 1);
  }
  if (std::abs(z) <= 2.0) {
    Complex series(0.0, 0.0), pw(1.0, 0.0);
    for (int k = 1; k < 60; ++k) {
      pw *= -z / double(k);
      series += pw / double(k);
      if (std::abs(pw) < 1e-18) break;
    }
    const Complex e1 = -kEuler - std::log(z) - series;
    Complex acc = std::pow(-z, m) * e1;
    if (m > 0) {
      Complex partial(0.0, 0.0), zk(1.0, 0.0), tail(0.0, 0.0);
      for (int j = 1; j <= m; ++j) {
        partial += zk;  // sum_{k<j} z^k/k!
        zk *= z / double(j);
        tail += boost::math::binomial_coefficient<double>(m, j) * std::pow(-z, m - j) * factorial(j - 1) * partial;
      }
      acc += std::exp(-z) * tail;
    }
    return acc;
  }
  // e^{-z} integral_0^inf r^m e^{-r} / (z + r) dr along a ray clear of the pole at r = -z
  double phi = 0.0;
  if (z.real() <= 0.0) phi = std::signbit(z.imag()) ? -0.25 * kPi : 0.25 * kPi;
  const Complex dir = std::polar(1.0, phi);
  auto g = [&](double rho) {
    const Complex r = rho * dir;
    return std::pow(r, m) * std::exp(-r) * dir / (z + r);
  };
  const double L = (50.0 + 4.0 * m) / std::cos(phi);
  std::vector<double> breaks;
  for (double b = 0.0; b < L; b += 4.0) breaks.push_back(b);
  breaks.push_back(L);
  const Complex ez = std::exp(-z);
  const double tol = std::max(abs_tol / std::max(std::abs(ez), 1e-300), 1e-300);
  const auto res = quad::integrate(g, breaks, tol, 1e-15);
  return ez * res.value;
}

}  // namespace detail

Complex e_star(int m, Complex z, const EvalPrecision& prec) {
  prec.validate();
  if (m < 0) throw Error(Errc::InvalidArgument, "m must be >= 0");
  if (!is_finite(z)) throw Error(Errc::InvalidArgument, "non-finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw Error(Errc::OnNegativeRealAxisCut, "E* is ambiguous on the nonpositive real axis");
  return detail::e_star_signed(m, z, prec.abs_err / 4);
}

Complex u_m(const Kernel& k, double H, int m, Complex z, const EvalPrecision& prec) {
  prec.validate();
  check_H(H);
  if (m < 0) throw Error(Errc::InvalidArgument, "m must be >= 0");
  if (!is_finite(z)) throw Error(Errc::InvalidArgument, "non-finite argument");
  if (z.imag() == 0.0) z = Complex(z.real(), -0.0);
  if (z == Complex(0.0, -0.0) && m == 0) throw Error(Errc::OnSingularity, "U_0 is singular at 0");
  const double mf = factorial(m);
  const double tol = prec.abs_err / 10;
  auto g = [&](double tau) {
    const double lx = 1.0 + tau / H;
    const double w = k.f(tau);
    if (w == 0.0) return Complex(0.0, 0.0);
    return w * std::pow(lx, -m) * detail::e_star_signed(m, z * lx, tol) / mf;
  };
  const std::array<double, 3> breaks{0.0, 0.5, 1.0};
  return quad::integrate(g, std::span<const double>(breaks), tol, 1e-14).value;
}

}  // namespace zeta_eta
