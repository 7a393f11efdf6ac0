#pragma once

// log zeta(s) on the branch fixed by log zeta(sigma + it) -> 0 as sigma -> +inf, with
// one-sided limits at t = 0 and at zero ordinates, and S(t) = Im log zeta(1/2 + it) / pi.

#include <functional>
#include <map>
#include <vector>

#include "zeta_eta/types.hpp"
#include "zeta_eta/zero_store.hpp"

namespace zeta_eta {

/// |t - gamma| below this counts as "t is an ordinate".
inline constexpr double kOrdinateTol = 1e-10;
/// Shift applied towards the real axis when t sits on an ordinate.
inline constexpr double kOrdinateOffset = 1e-9;

struct BranchCrossing {
  ZeroRecord zero;
  bool above_path;  // the path runs just below this zero (t -> gamma - eps)
};

/// Continuation path used for log zeta(s): the horizontal segment at height `t` from
/// sigma_start down to sigma_end, and the tabulated zeros whose ordinate matches t.
struct BranchPath {
  double t = 0.0;
  double sigma_start = 40.0;
  double sigma_end = 0.0;
  std::vector<BranchCrossing> crossings;
};

BranchPath branch_path(Complex s, const ZeroStore& store);

/// log zeta(s). sigma >= -1. Below sigma = 1 the table must reach |t|.
Complex log_zeta(Complex s, const ZeroStore& store, const EvalPrecision& prec = {});
/// Table-free variant, limited to sigma >= 1 or |t| < 14 (no zeros to cross).
Complex log_zeta(Complex s, const EvalPrecision& prec = {});

double big_s(double t, const ZeroStore& store, const EvalPrecision& prec = {});

namespace detail {

/// Continues log zeta along a straight path s(x) = origin + x * direction, from an anchor
/// value, caching every accepted point. The path must not pass through a zero or the pole.
class PathTracker {
 public:
  using Dist = std::function<double(Complex)>;

  PathTracker(Complex origin, Complex direction, double anchor_x, Complex anchor_log, Dist dist_to_singular,
              double zeta_tol);

  Complex at(double x);
  Complex point(double x) const { return origin_ + x * direction_; }
  long zeta_evals() const { return evals_; }

 private:
  struct Node {
    Complex zeta;
    double phase;
  };

  Complex zeta_at(double x);
  Complex finish(double x, const Node& n);

  Complex origin_, direction_;
  Dist dist_;
  double tol_;
  std::map<double, Node> nodes_;
  long evals_ = 0;
};

/// Horizontal tracker at height t >= 0 starting from the principal log at sigma = 2.
PathTracker horizontal_tracker(double t, const ZeroStore* store, double zeta_tol);

/// Distance from s to the nearest zero of zeta on the table (or the pole); +inf if none nearby.
double distance_to_singular(Complex s, const ZeroStore* store);

struct SingularPoint {
  Complex where;
  int order;  // +multiplicity for zeros, -1 for the pole
};
/// Nearest zero (tabulated, non-hypothetical) or the pole to s.
SingularPoint nearest_singular(Complex s, const ZeroStore* store);

/// Ordinate-offset rule: returns the evaluation height for t >= 0.
double effective_height(double t, const ZeroStore* store);

}  // namespace detail
}  // namespace zeta_eta
