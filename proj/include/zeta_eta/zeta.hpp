#pragma once

// Riemann zeta, its logarithmic derivative and the Hardy Z-function.
//
// Valid region: sigma >= -1, |t| <= 1e6. Evaluation uses Euler-Maclaurin summation with
// a cutoff growing linearly in |s|. Requests tighter than ~5e-14 are computed with
// 50-digit arithmetic and rounded.

#include "zeta_eta/types.hpp"

namespace zeta_eta {

class ZeroStore;

struct ZetaWithDerivative {
  Complex value;
  Complex derivative;
};

Complex zeta(Complex s, const EvalPrecision& prec = {});
ZetaWithDerivative zeta_with_derivative(Complex s, const EvalPrecision& prec = {});

/// zeta'(s)/zeta(s). Throws NearSingularity within sqrt(abs_err) of s = 1, or when
/// |zeta(s)| <= abs_err (no table to identify the zero).
Complex zeta_log_deriv(Complex s, const EvalPrecision& prec = {});
/// Same, but refuses points within sqrt(abs_err) of any tabulated zero and names it.
Complex zeta_log_deriv(Complex s, const ZeroStore& store, const EvalPrecision& prec = {});

/// Principal log Gamma(z) for Re z > 0 (continuous, so Im is the continuous arg Gamma).
Complex log_gamma(Complex z);

/// Riemann-Siegel theta: arg Gamma(1/4 + it/2) - (t/2) log pi, continuous with theta(0) = 0.
double riemann_siegel_theta(double t);

/// Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t >= 0.
double hardy_z(double t, const EvalPrecision& prec = {});

namespace detail {
/// Double-precision Euler-Maclaurin with an explicit truncation tolerance (no 50-digit fallback).
Complex zeta_fast(Complex s, double tol);
ZetaWithDerivative zeta_fast_with_derivative(Complex s, double tol);
}  // namespace detail

}  // namespace zeta_eta
