#pragma once

// Iterated integrals eta_m(s) of log zeta, by two independent routes:
//   iterated: eta_m = integral_0^t eta_{m-1}(sigma + iu) du + c_m(sigma), collapsed to one
//             weighted integral of log zeta on the vertical line;
//   vertical: i^m/(m-1)! integral_sigma^inf (a - sigma)^{m-1} log zeta(a + it) da plus a
//             finite sum over zeros with beta > sigma, 0 < gamma < t.
// Hypothetical zeros enter only the zero sum of the vertical route (the iterated route sees
// the true zeta), so the two routes agree only on stores without hypothetical zeros.

#include "zeta_eta/types.hpp"
#include "zeta_eta/zero_store.hpp"

namespace zeta_eta {

enum class EtaRoute { Iterated, Vertical };

struct EtaValue {
  Complex s;
  int m = 0;
  Complex value;
  EtaRoute route = EtaRoute::Vertical;
  double est_err = 0.0;
  // vertical route only: the log zeta integral and the zero sum
  Complex integral_part;
  Complex zero_sum_part;
};

/// c_m(sigma) = i^m/(m-1)! integral_sigma^inf (a - sigma)^{m-1} log zeta(a) da, with the
/// t -> 0+ branch (Im log zeta(a) = -pi for a < 1). sigma >= -1, sigma != 1 when m = 1 is fine
/// (log singularity is integrable).
Complex c_m(double sigma, int m, const EvalPrecision& prec = {});

/// 2 pi sum_{k<m} i^{m-1-k} / ((m-k)! k!) sum_{beta > sigma, 0 < gamma < t} mult (beta - sigma)^{m-k} (t - gamma)^k.
/// Every record counts, hypothetical or not. m >= 1.
Complex zero_sum(Complex s, int m, const ZeroStore& store);

EtaValue eta_vertical(Complex s, int m, const ZeroStore& store, const EvalPrecision& prec = {});
EtaValue eta_iterated(Complex s, int m, const ZeroStore& store, const EvalPrecision& prec = {});

/// S_m(t) = Im eta_m(1/2 + it) / pi (vertical route; big_s for m = 0).
double s_m(double t, int m, const ZeroStore& store, const EvalPrecision& prec = {});

/// Upper bound for |integral_A^inf (a - sigma)^{m-1} log zeta(a + it) da| with A >= 2.
double vertical_tail_bound(double sigma, double A, int m);

}  // namespace zeta_eta
