#pragma once

// Point sets shared by the calibration program and the acceptance checks. Calibration and
// test sets come from different seeds (or different fixed grids) and are checked disjoint.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace sets {

inline double unit(std::mt19937_64& g) { return double(g() >> 11) * 0x1.0p-53; }

// Uniform in the closed unit disc, |Im z| >= 1e-3 so that Im z != 0 is unambiguous.
inline std::vector<std::complex<double>> disc_points(std::uint64_t seed, int n) {
  std::mt19937_64 g(seed);
  std::vector<std::complex<double>> out;
  while (int(out.size()) < n) {
    const double x = 2.0 * unit(g) - 1.0, y = 2.0 * unit(g) - 1.0;
    if (x * x + y * y > 1.0 || std::abs(y) < 1e-3) continue;
    out.emplace_back(x, y);
  }
  return out;
}

inline std::vector<double> uniform_heights(std::uint64_t seed, int n, double lo, double hi) {
  std::mt19937_64 g(seed);
  std::vector<double> out(n);
  for (auto& t : out) t = lo + (hi - lo) * unit(g);
  return out;
}

// U_m shape on the unit disc
inline constexpr std::uint64_t kDiscCalibSeed = 1009, kDiscTestSeed = 2003;
inline constexpr int kDiscCalibCount = 200, kDiscTestCount = 100;

// residual scaling: the test grid is fixed; the calibration grid interleaves it
inline const std::vector<double> kResidualTestT{50.0, 100.0, 200.0};
inline const std::vector<double> kResidualTestX{10.0, 30.0, 100.0};
inline const std::vector<double> kResidualCalibT{70.0, 150.0, 250.0};
inline const std::vector<double> kResidualCalibX{15.0, 50.0, 80.0};

// P_f decomposition heights in [20, 400]
inline constexpr std::uint64_t kRelzzCalibSeed = 3001, kRelzzTestSeed = 4001;
inline constexpr int kRelzzCount = 50;

}  // namespace sets
