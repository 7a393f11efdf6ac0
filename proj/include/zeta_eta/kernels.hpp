#pragma once

// Smoothing kernels f on [0, 1], the derived weights u_{f,H}, v_{f,H}, the modified
// exponential integrals E*_{m+1} and the kernel transform U_m.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "zeta_eta/types.hpp"

namespace zeta_eta {

enum class KernelFamily { PolyBump, Tent, Custom };

/// Largest derivative order the library will check or differentiate.
inline constexpr int kSmoothnessCap = 10;

class Kernel {
 public:
  /// f(x) = x^d (1-x)^d / B(d+1, d+1), 1 <= d <= 16.
  static Kernel poly_bump(int d);
  /// f(x) = 4 min(x, 1-x). Continuous, but not C^1 on [0, 1].
  static Kernel tent();
  /// Any nonnegative f on [0, 1]; rescaled to mass one. `d_smooth` is the caller's claim.
  static Kernel custom(std::function<double(double)> f, int d_smooth, std::string name = "custom");
  /// Piecewise-linear interpolation of equally spaced samples on [0, 1].
  static Kernel from_table(std::vector<double> samples);

  KernelFamily family() const { return family_; }
  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  /// Smoothness index used by the approximation bounds: the largest d with f in
  /// C^{d-2}(R) and C^d([0, 1]). 0 when f is not even C^1 on [0, 1].
  int d_smooth() const { return d_smooth_; }
  /// Meets the standing hypothesis (C^1 on [0, 1], or the C^{d-2}(R) / C^d([0,1]) pair).
  bool admissible() const { return d_smooth_ >= 1; }

  double f(double x) const;
  /// k-th derivative on the open interval (0, 1), one-sided at the endpoints; k <= kSmoothnessCap.
  double derivative(int k, double x) const;
  /// F(x) = integral_0^x f.
  double cdf(double x) const;

 private:
  Kernel() = default;

  KernelFamily family_ = KernelFamily::PolyBump;
  std::string name_;
  int degree_ = 0;
  int d_smooth_ = 0;
  std::vector<double> table_;   // from_table samples (normalized)
  std::function<double(double)> fn_;
  double scale_ = 1.0;
  std::shared_ptr<std::vector<double>> cdf_grid_;  // custom: cumulative integral on a uniform grid
};

/// family + d; Custom cannot be built this way (InvalidFamily). Tent ignores d.
Kernel make_kernel(KernelFamily family, int d = 4);
KernelFamily parse_family(const std::string& name);
std::string family_name(KernelFamily family);

/// Highest k <= kSmoothnessCap such that f, f', ..., f^(k) vanish at both endpoints, i.e. the
/// extension by zero is C^k(R); -1 if f itself jumps. Checked numerically with `tol`.
int smoothness_on_line(const Kernel& k, double tol = 1e-8);

double u_f_H(const Kernel& k, double H, double x);
double v_f_H(const Kernel& k, double H, double y);

/// E*_{m+1}(z) = integral_z^{z+inf} (w - z)^m e^{-w} / w dw. Throws OnNegativeRealAxisCut for real z <= 0.
Complex e_star(int m, Complex z, const EvalPrecision& prec = {});
/// E_1(z) with the principal branch.
Complex exp_integral_e1(Complex z);

/// U_m(z) = (1/m!) integral u_{f,H}(x) (log x)^{-m} E*_{m+1}(z log x) dx. For real z the
/// limit from below (Im z -> 0-) is taken.
Complex u_m(const Kernel& k, double H, int m, Complex z, const EvalPrecision& prec = {});

namespace detail {
/// E*_{m+1} with the sign of a zero imaginary part selecting the side of the cut.
Complex e_star_signed(int m, Complex z, double abs_tol);
}  // namespace detail

}  // namespace zeta_eta
