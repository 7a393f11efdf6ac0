#pragma once

// Adaptive Gauss-Kronrod (7/15) integration for real and complex integrands, plus
// Gauss-Legendre rules. Header-only since the integrands are always lambdas.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <utility>
#include <vector>

namespace zeta_eta::quad {

template <class T>
struct Result {
  T value{};
  double abs_error = 0.0;
  long evals = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Segment {
  double a, b;
  T value;
  double err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

template <class F>
auto kronrod15(F& f, double a, double b) {
  using T = decltype(f(a));
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T resk = fc * kWgk[7];
  T resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    resk += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) resg += (f1 + f2) * kWg[j / 2];
  }
  return Segment<T>{a, b, resk * h, std::abs((resk - resg) * h)};
}

}  // namespace detail

/// Globally adaptive integration over [breaks.front(), breaks.back()], starting from the
/// panels given by `breaks` (sorted). Stops once the summed error estimate is below
/// max(abs_tol, rel_tol * |value|) or the evaluation budget is spent.
template <class F>
auto integrate(F&& f, std::span<const double> breaks, double abs_tol, double rel_tol = 0.0,
               long max_evals = 400000) {
  using T = decltype(f(breaks[0]));
  Result<T> out;
  if (breaks.size() < 2) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Segment<T>> heap;
  double err_sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    auto seg = detail::kronrod15(f, breaks[i], breaks[i + 1]);
    out.evals += 15;
    err_sum += seg.err;
    heap.push(seg);
  }
  auto total = [&] {
    T v{};
    auto copy = heap;
    while (!copy.empty()) {
      v += copy.top().value;
      copy.pop();
    }
    return v;
  };
  T value = total();
  int since_resum = 0;
  while (!heap.empty()) {
    const double tol = std::max(abs_tol, rel_tol * std::abs(value));
    if (err_sum <= tol) {
      out.converged = true;
      break;
    }
    if (out.evals + 30 > max_evals) break;
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted in floating point
    heap.pop();
    auto left = detail::kronrod15(f, worst.a, mid);
    auto right = detail::kronrod15(f, mid, worst.b);
    out.evals += 30;
    err_sum += left.err + right.err - worst.err;
    value += left.value + right.value - worst.value;
    heap.push(left);
    heap.push(right);
    if (++since_resum == 64) {  // curb drift of the running sums
      since_resum = 0;
      value = total();
      err_sum = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        err_sum += copy.top().err;
        copy.pop();
      }
    }
  }
  out.value = total();
  out.abs_error = 0.0;
  while (!heap.empty()) {
    out.abs_error += heap.top().err;
    heap.pop();
  }
  if (!out.converged) out.converged = out.abs_error <= std::max(abs_tol, rel_tol * std::abs(out.value));
  return out;
}

template <class F>
auto integrate(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0,
               long max_evals = 400000) {
  const std::array<double, 2> br{a, b};
  return integrate(std::forward<F>(f), std::span<const double>(br), abs_tol, rel_tol, max_evals);
}

/// Same as integrate(), but each panel is remapped by u = a + (b - a)(10x^3 - 15x^4 + 6x^5),
/// which flattens integrable (e.g. logarithmic) singularities at panel ends.
template <class F>
auto integrate_smoothed_ends(F&& f, std::span<const double> breaks, double abs_tol, double rel_tol = 0.0,
                             long max_evals = 400000) {
  using T = decltype(f(breaks[0]));
  Result<T> out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], w = breaks[i + 1] - a;
    if (!(w > 0.0)) continue;
    auto g = [&](double x) {
      const double x2 = x * x;
      const double u = a + w * x2 * x * (10.0 - 15.0 * x + 6.0 * x2);
      const double du = 30.0 * w * x2 * (1.0 - x) * (1.0 - x);
      return f(u) * du;
    };
    const auto r = integrate(g, 0.0, 1.0, abs_tol / double(breaks.size() - 1), rel_tol, max_evals);
    out.value += r.value;
    out.abs_error += r.abs_error;
    out.evals += r.evals;
  }
  out.converged = out.abs_error <= std::max(abs_tol, rel_tol * std::abs(out.value));
  return out;
}

/// One panel [a, b] with the same end smoothing, for integrands singular at an end.
/// f(u, off) also receives off = u - a on the left half and u - b on the right half,
/// computed without the cancellation that u - a suffers once u is rounded.
template <class F>
auto integrate_panel_offsets(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                             long max_evals = 400000) {
  const double w = b - a;
  auto smooth = [](double x) { return x * x * x * (10.0 - x * (15.0 - 6.0 * x)); };
  auto g = [&](double x) {
    const double y = x < 0.5 ? x : 1.0 - x;
    const double du = 30.0 * w * x * x * (1.0 - x) * (1.0 - x);
    if (x < 0.5) {
      const double off = w * smooth(y);
      return f(a + off, off) * du;
    }
    const double off = -w * smooth(y);
    return f(b + off, off) * du;
  };
  return integrate(g, 0.0, 1.0, abs_tol, rel_tol, max_evals);
}

/// n-point Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

/// Composite Gauss-Legendre on [a, b] with `panels` equal panels of `n` points each.
template <class F>
auto gauss_legendre_composite(F&& f, double a, double b, int n, int panels) {
  using T = decltype(f(a));
  const auto [x, w] = gauss_legendre(n);
  T acc{};
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double c = lo + 0.5 * width;
    for (int i = 0; i < n; ++i) acc += f(c + 0.5 * width * x[i]) * (0.5 * width * w[i]);
  }
  return acc;
}

}  // namespace zeta_eta::quad
