#pragma once

// Euler-Maclaurin summation for zeta(s) and zeta'(s), templated on the number type so the
// double path and the 50-digit path share one implementation.
//
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//             + sum_{k=1}^{K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1} + R_K

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "zeta_eta/types.hpp"

namespace zeta_eta::detail {

template <class C>
struct ZetaPair {
  C value;
  C deriv;
};

// n^{-s}. The double version reduces the phase t*log(n) in long double, since at large t the
// rounding of that product is the dominant error of the whole sum.
template <class C, class R>
C neg_power(const C& s, const R& ln) {
  return exp(-s * ln);
}

inline Complex neg_power(const Complex& s, const double&, long n) {
  const long double ln = std::log(static_cast<long double>(n));
  constexpr long double two_pi = 6.283185307179586476925286766559005768L;
  const long double ph = std::fmod(static_cast<long double>(s.imag()) * ln, two_pi);
  const double mag = std::exp(-s.real() * static_cast<double>(ln));
  return {mag * std::cos(static_cast<double>(ph)), -mag * std::sin(static_cast<double>(ph))};
}

template <class C, class R>
C neg_power(const C& s, const R& ln, long) {
  return neg_power(s, ln);
}

template <class C, class R, bool WithDeriv>
ZetaPair<C> euler_maclaurin(const C& s, const R& tol, long max_terms, int max_k) {
  using std::abs;
  using std::ceil;
  using std::exp;
  using std::log;
  const R abs_s = abs(s);
  const R sigma = real(s);
  long n_cut = std::max<long>(12, static_cast<long>(ceil(static_cast<double>(abs_s) * 0.4)) + 2);

  for (;;) {
    if (n_cut > max_terms)
      throw Error(Errc::BudgetExceeded, "Euler-Maclaurin cutoff exceeds max_terms");
    C sum(0), dsum(0);
    for (long n = 1; n < n_cut; ++n) {
      const R ln = log(R(n));
      const C term = neg_power(s, ln, n);
      sum += term;
      if constexpr (WithDeriv) dsum -= term * ln;
    }
    const R big_n = R(n_cut);
    const R ln_n = log(big_n);
    const C n_pow = neg_power(s, ln_n, n_cut);  // N^{-s}
    const C sm1 = s - R(1);
    sum += big_n * n_pow / sm1 + n_pow / R(2);
    if constexpr (WithDeriv)
      dsum += big_n * n_pow * (-ln_n / sm1 - R(1) / (sm1 * sm1)) - ln_n * n_pow / R(2);

    C rising = s;    // s(s+1)...(s+2k-2)
    C d_rising(1);   // its derivative in s
    C n_pow_k = n_pow / big_n;
    const R inv_n2 = R(1) / (big_n * big_n);
    R prev = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int k = 1; k <= max_k; ++k) {
      const R coef = boost::math::bernoulli_b2n<R>(k) / boost::math::factorial<R>(2 * k);
      const C term = coef * rising * n_pow_k;
      sum += term;
      if constexpr (WithDeriv) dsum += coef * (d_rising - ln_n * rising) * n_pow_k;
      const R mag = abs(term);
      const R remainder = mag * abs(s + R(2 * k + 1)) / std::max<R>(sigma + R(2 * k + 1), R(0.5));
      if (remainder < tol) {
        converged = true;
        break;
      }
      if (k > 2 && mag > prev) break;  // asymptotic series started to diverge
      prev = mag;
      const C a = s + R(2 * k - 1);
      const C b = s + R(2 * k);
      if constexpr (WithDeriv) d_rising = d_rising * a * b + rising * (a + b);
      rising *= a * b;
      n_pow_k *= inv_n2;
    }
    if (converged) return {sum, dsum};
    n_cut = n_cut * 3 / 2 + 1;
  }
}

}  // namespace zeta_eta::detail
