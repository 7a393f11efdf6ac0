#include "zeta_eta/branch_logzeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zeta_eta/zeta.hpp"

namespace zeta_eta {
namespace {

constexpr double kFirstOrdinate = 14.134725141734693790457251983562;
constexpr double kMaxStep = 0.25;
constexpr double kSearchBand = 3.0;

void check_domain(Complex s) {
  if (!is_finite(s)) throw Error(Errc::InvalidArgument, "non-finite argument");
  if (s.real() < -1.0) throw Error(Errc::InvalidArgument, "log_zeta needs sigma >= -1");
  if (std::abs(s.imag()) > 1e6) throw Error(Errc::InvalidArgument, "|t| > 1e6 is outside the supported region");
  if (std::abs(s - 1.0) < 1e-12) throw Error(Errc::PoleAtOne, "s = 1");
}

double tracker_tol(const EvalPrecision& prec) { return std::clamp(0.1 * prec.abs_err, 1e-16, 1e-15); }

// Real part recomputed so that log|zeta| meets abs_err even when |zeta| is small.
Complex refine_real(Complex s, Complex tracked, const EvalPrecision& prec) {
  const double mag = std::exp(tracked.real());
  const double need = 0.1 * prec.abs_err * mag;
  if (need >= 1e-13) return tracked;
  EvalPrecision fine = prec;
  fine.abs_err = std::max(need, 1e-30);
  return {std::log(std::abs(zeta(s, fine))), tracked.imag()};
}

Complex log_zeta_real_axis(double sigma, const EvalPrecision& prec) {
  if (sigma == 1.0) throw Error(Errc::PoleAtOne, "s = 1");
  EvalPrecision p = prec;
  p.abs_err = std::max(prec.abs_err * 0.1, 1e-30);
  const double z = zeta(Complex(sigma, 0.0), p).real();
  // Approached from t > 0, arg zeta picks up -pi going round the pole.
  if (sigma > 1.0) return {std::log(z), 0.0};
  return {std::log(std::abs(z)), -kPi};
}

Complex log_zeta_upper(Complex s, const ZeroStore* store, const EvalPrecision& prec) {
  const double sigma = s.real();
  if (sigma >= 2.0) {
    EvalPrecision p = prec;
    p.abs_err = std::max(prec.abs_err * 0.1, 1e-30);
    return std::log(zeta(s, p));
  }
  const double t = detail::effective_height(s.imag(), store);
  if (t != s.imag()) {
    for (const auto& r : store ? store->in_range(s.imag() - kOrdinateTol, s.imag() + kOrdinateTol)
                               : std::span<const ZeroRecord>{}) {
      if (!r.hypothetical && std::abs(sigma - r.beta) <= kOrdinateTol)
        throw Error(Errc::OnSingularity, "s is a zero of zeta");
    }
    if (!store && std::abs(sigma - 0.5) <= kOrdinateTol) throw Error(Errc::OnSingularity, "s is a zero of zeta");
  }
  auto tracker = detail::horizontal_tracker(t, store, tracker_tol(prec));
  const Complex v = tracker.at(sigma);
  return refine_real(Complex(sigma, t), v, prec);
}

}  // namespace

namespace detail {

double distance_to_singular(Complex s, const ZeroStore* store) {
  double d = std::abs(s - 1.0);
  const double t = std::abs(s.imag());
  const double sgn = s.imag() < 0 ? -1.0 : 1.0;
  if (store) {
    for (const auto& r : store->in_range(t - kSearchBand, t + kSearchBand)) {
      if (r.hypothetical) continue;
      d = std::min(d, std::abs(s - Complex(r.beta, sgn * r.gamma)));
    }
  } else {
    d = std::min(d, std::abs(s - Complex(0.5, sgn * kFirstOrdinate)));
  }
  return d;
}

SingularPoint nearest_singular(Complex s, const ZeroStore* store) {
  SingularPoint best{Complex(1.0, 0.0), -1};
  double d = std::abs(s - 1.0);
  const double t = std::abs(s.imag());
  const double sgn = s.imag() < 0 ? -1.0 : 1.0;
  if (store) {
    for (const auto& r : store->in_range(t - kSearchBand, t + kSearchBand)) {
      if (r.hypothetical) continue;
      const Complex rho(r.beta, sgn * r.gamma);
      if (std::abs(s - rho) < d) {
        d = std::abs(s - rho);
        best = {rho, r.multiplicity};
      }
    }
  } else if (std::abs(s - Complex(0.5, sgn * kFirstOrdinate)) < d) {
    best = {Complex(0.5, sgn * kFirstOrdinate), 1};
  }
  return best;
}

double effective_height(double t, const ZeroStore* store) {
  if (store) {
    if (store->ordinate_near(t, kOrdinateTol)) return t - kOrdinateOffset;
  } else if (std::abs(t - kFirstOrdinate) <= kOrdinateTol) {
    return t - kOrdinateOffset;
  }
  return t;
}

PathTracker::PathTracker(Complex origin, Complex direction, double anchor_x, Complex anchor_log,
                         Dist dist_to_singular, double zeta_tol)
    : origin_(origin), direction_(direction / std::abs(direction)), dist_(std::move(dist_to_singular)),
      tol_(zeta_tol) {
  nodes_.emplace(anchor_x, Node{std::exp(anchor_log), anchor_log.imag()});
}

Complex PathTracker::zeta_at(double x) {
  ++evals_;
  return detail::zeta_fast(point(x), tol_);
}

Complex PathTracker::finish(double, const Node& n) { return {std::log(std::abs(n.zeta)), n.phase}; }

Complex PathTracker::at(double x) {
  auto hi = nodes_.lower_bound(x);
  if (hi != nodes_.end() && hi->first == x) return finish(x, hi->second);
  auto start = hi;
  if (hi == nodes_.end() || (hi != nodes_.begin() && x - std::prev(hi)->first < hi->first - x)) start = std::prev(hi);
  double cur = start->first;
  Node node = start->second;
  const double dir = x > cur ? 1.0 : -1.0;
  while (cur != x) {
    const double d = dist_(point(cur));
    if (d < 1e-15) throw Error(Errc::OnSingularity, "continuation path meets a zero or the pole");
    double h = std::min({kMaxStep, 0.5 * d, std::abs(x - cur)});
    while (true) {
      const double next = (h == std::abs(x - cur)) ? x : cur + dir * h;
      const double mid = 0.5 * (cur + next);
      const Complex zm = zeta_at(mid);
      const Complex zn = zeta_at(next);
      const double d1 = std::arg(zm / node.zeta);
      const double d2 = std::arg(zn / zm);
      const double dfull = std::arg(zn / node.zeta);
      if (std::abs(d1) < 0.5 * kPi && std::abs(d2) < 0.5 * kPi && std::abs(d1 + d2 - dfull) < 1e-8) {
        nodes_.emplace(mid, Node{zm, node.phase + d1});
        node = Node{zn, node.phase + d1 + d2};
        nodes_.emplace(next, node);
        cur = next;
        break;
      }
      h *= 0.5;
      if (h < 1e-14 * std::max(1.0, std::abs(cur)))
        throw Error(Errc::BudgetExceeded, "phase tracking step underflow");
    }
  }
  return finish(x, node);
}

PathTracker horizontal_tracker(double t, const ZeroStore* store, double zeta_tol) {
  const Complex anchor = std::log(detail::zeta_fast(Complex(2.0, t), zeta_tol));
  return PathTracker(Complex(0.0, t), Complex(1.0, 0.0), 2.0, anchor,
                     [store](Complex s) { return distance_to_singular(s, store); }, zeta_tol);
}

}  // namespace detail

BranchPath branch_path(Complex s, const ZeroStore& store) {
  BranchPath path;
  const double t = std::abs(s.imag());
  path.t = detail::effective_height(t, &store);
  path.sigma_end = s.real();
  if (path.t != t) {
    for (const auto& r : store.in_range(t - kOrdinateTol, t + kOrdinateTol))
      if (!r.hypothetical && r.beta > s.real()) path.crossings.push_back({r, true});
    std::sort(path.crossings.begin(), path.crossings.end(),
              [](const BranchCrossing& a, const BranchCrossing& b) { return a.zero.beta > b.zero.beta; });
  }
  if (s.imag() < 0) path.t = -path.t;
  return path;
}

Complex log_zeta(Complex s, const ZeroStore& store, const EvalPrecision& prec) {
  prec.validate();
  check_domain(s);
  if (s.imag() < 0) return std::conj(log_zeta(std::conj(s), store, prec));
  if (s.imag() == 0.0) return log_zeta_real_axis(s.real(), prec);
  if (s.real() < 1.0 && s.imag() > store.t_max())
    throw Error(Errc::BeyondTable, "zero table does not reach this height");
  return log_zeta_upper(s, &store, prec);
}

Complex log_zeta(Complex s, const EvalPrecision& prec) {
  prec.validate();
  check_domain(s);
  if (s.imag() < 0) return std::conj(log_zeta(std::conj(s), prec));
  if (s.imag() == 0.0) return log_zeta_real_axis(s.real(), prec);
  if (s.real() < 1.0 && s.imag() >= 14.0)
    throw Error(Errc::BeyondTable, "a zero table is needed for sigma < 1 and |t| >= 14");
  return log_zeta_upper(s, nullptr, prec);
}

double big_s(double t, const ZeroStore& store, const EvalPrecision& prec) {
  if (!(t >= 0.0)) throw Error(Errc::InvalidArgument, "big_s needs t >= 0");
  // On an ordinate only the imaginary part has a limit, so evaluate at the offset height.
  const double te = t == 0.0 ? t : detail::effective_height(t, &store);
  return log_zeta(Complex(0.5, te), store, prec).imag() / kPi;
}

}  // namespace zeta_eta
