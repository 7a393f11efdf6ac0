#pragma once

// Prime-side objects: the von Mangoldt sieve, the smoothed Dirichlet polynomial
// approximating eta_m, the explicit zero term Y_m, the residual with its two bound shapes,
// P_f and its decomposition on the critical line, and the weights w_X, Lambda_X, Lambda'_X.

#include <cstdint>
#include <vector>

#include "zeta_eta/eta.hpp"
#include "zeta_eta/kernels.hpp"
#include "zeta_eta/types.hpp"
#include "zeta_eta/zero_store.hpp"

namespace zeta_eta {

/// Smallest-prime-factor sieve on [1, limit].
class MangoldtSieve {
 public:
  explicit MangoldtSieve(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  /// Lambda(n); BeyondSieve above the limit, InvalidArgument for n < 1.
  double lambda(std::int64_t n) const;
  bool is_prime(std::int64_t n) const;

 private:
  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
};

double von_mangoldt(std::int64_t n, const MangoldtSieve& sieve);

struct ApproxConfig {
  int m = 0;
  double X = 10.0;
  double H = 1.0;
  Kernel kernel = Kernel::poly_bump(4);

  /// m in [0, 8], X >= 3, H >= 1, admissible kernel.
  void validate() const;
};

/// i^m sum_{2 <= n <= X^{1+1/H}} Lambda(n) v_{f,H}(e^{log n / log X}) / (n^s (log n)^{m+1}).
/// The weights depend only on the configuration, so a prepared polynomial is cheap to
/// evaluate at many s.
class DirichletPoly {
 public:
  DirichletPoly(const ApproxConfig& cfg, const MangoldtSieve& sieve);
  /// Plain truncation: weight 1 for n <= X, nothing beyond.
  static DirichletPoly plain(int m, double X, const MangoldtSieve& sieve);

  Complex operator()(Complex s) const;
  std::size_t terms() const { return n_.size(); }

 private:
  DirichletPoly() = default;

  int m_ = 0;
  std::vector<std::int64_t> n_;
  std::vector<double> w_;  // Lambda(n) v(...) / (log n)^{m+1}
};

Complex dirichlet_poly(Complex s, const ApproxConfig& cfg, const MangoldtSieve& sieve);

/// Y_m(s, X). m = 0: sum over zeros with |s - rho| <= 1/log X of log((s - rho) log X), with
/// -pi <= arg < pi. m >= 1: the finite sum over beta > sigma, 0 < gamma < t (X plays no role).
/// Errors: BeyondTable (t > t_max), ZeroCoincidesWithS (|s - rho| <= 1e-12).
Complex y_m(Complex s, double X, int m, const ZeroStore& store);

struct ResidualReport {
  Complex s;
  ApproxConfig cfg;
  Complex eta;
  double eta_err = 0.0;
  Complex poly;
  Complex y;
  Complex r;
  double bound_esrm = 0.0;
  /// RH form; only meaningful when rh_form_applies.
  double bound_esrm2 = 0.0;
  bool rh_form_applies = false;
  /// |r| / bound_esrm2 when the RH form applies, else |r| / bound_esrm.
  double ratio = 0.0;
};

/// General bound shape with implied constant 1 and d = min(D(f), 4). Sums every tabulated zero
/// (and its mirror at -gamma); zeros above t_max enter through the mean density on the line.
/// Infinite when d = 0, where the sum over far zeros diverges.
double bound_esrm(Complex s, const ApproxConfig& cfg, const ZeroStore& store);

/// X^{1/2 - sigma} log t / (log X)^m * (1/loglog t + log(H + 2)/log X).
double bound_esrm2(Complex s, const ApproxConfig& cfg);

/// r = eta - poly - y with eta from the vertical route (log zeta for m = 0).
/// Requires t >= 14 and sigma >= 1/2.
ResidualReport residual(Complex s, const ApproxConfig& cfg, const ZeroStore& store, const MangoldtSieve& sieve,
                        const EvalPrecision& prec = {});
/// Same, reusing a prepared polynomial built from `cfg`.
ResidualReport residual(Complex s, const ApproxConfig& cfg, const DirichletPoly& poly, const ZeroStore& store,
                        const EvalPrecision& prec = {});

/// sum_{p <= X^2} v_{f,1}(e^{log p / log X}) / p^s.
Complex p_f(Complex s, double X, const Kernel& kernel, const MangoldtSieve& sieve);

struct RelzzDecomposition {
  Complex lhs;
  double main1 = 0.0;
  double main2 = 0.0;
  Complex diff;
};

/// P_f(1/2 + it, X) split into the zero-window terms and the remainder. Needs
/// log t <= X <= t, t >= 14 and a store without hypothetical zeros (HypothesisViolated).
RelzzDecomposition relzz_decompose(double t, double X, const Kernel& kernel, const ZeroStore& store,
                                   const MangoldtSieve& sieve);

/// Piecewise weight: 1 on [1, X], quadratic-log taper on [X, X^3], 0 beyond.
double w_x(double y, double X);
double lambda_x(std::int64_t n, double X, const MangoldtSieve& sieve);
/// Lambda(n) for n <= X, Lambda(n) log(X^2/n)/log X on [X, X^2], 0 beyond.
double lambda_prime_x(std::int64_t n, double X, const MangoldtSieve& sieve);

}  // namespace zeta_eta
