#pragma once

// Nontrivial-zero table: ingestion, window queries and hypothetical off-line zeros.

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeta_eta/types.hpp"

namespace zeta_eta {

/// One nontrivial zero rho = beta + i gamma with gamma > 0. Tabulated zeros have beta = 1/2;
/// records with any other beta are hypothetical.
struct ZeroRecord {
  double gamma = 0.0;
  double beta = 0.5;
  int multiplicity = 1;
  bool hypothetical = false;

  Complex rho() const { return {beta, gamma}; }
};

enum class ZeroFormat { Plain, Csv };

/// Immutable, gamma-sorted collection of zeros. Copies share the record buffer.
/// `t_max` is the height below which the table is taken to be complete.
class ZeroStore {
 public:
  ZeroStore();
  ZeroStore(std::vector<ZeroRecord> records, double t_max, std::string source);

  std::span<const ZeroRecord> records() const { return *records_; }
  std::size_t size() const { return records_->size(); }
  bool empty() const { return records_->empty(); }
  double t_max() const { return t_max_; }
  const std::string& source() const { return source_; }

  /// Records with lo <= gamma <= hi.
  std::span<const ZeroRecord> in_range(double lo, double hi) const;

  /// Zeros with 0 < gamma < T counted with multiplicity.
  long count_below(double T, bool include_hypothetical = false) const;

  /// Tabulated (non-hypothetical) zero whose ordinate is within `tol` of t.
  std::optional<ZeroRecord> ordinate_near(double t, double tol) const;

  /// Nearest tabulated ordinate to t (nullopt for an empty table).
  std::optional<double> nearest_ordinate(double t) const;

  bool has_hypothetical() const;

 private:
  std::shared_ptr<const std::vector<ZeroRecord>> records_;
  double t_max_ = 0.0;
  std::string source_;
};

ZeroStore load_zeros(const std::filesystem::path& path, ZeroFormat format);
ZeroStore parse_zeros(std::istream& in, ZeroFormat format, const std::string& source);

/// Number of zeros with |t - gamma| <= h, with multiplicity, including the mirrored zeros
/// at -gamma. Throws BeyondTable if t + h > t_max.
long count_window(const ZeroStore& store, double t, double h);

/// Selberg's abscissa 1/2 + 2 max{beta - 1/2, 2/log X} over zeros with
/// |t - gamma| <= X^{3(beta - 1/2)} / log X.
double sigma_Xt(const ZeroStore& store, double X, double t);

/// New store with one extra hypothetical zero; the input store is untouched.
ZeroStore inject_hypothetical(const ZeroStore& store, double beta, double gamma, int multiplicity = 1);

struct RvmfCheck {
  long n_store = 0;
  double n_rvmf = 0.0;
  double delta = 0.0;
};

/// Compares the table count below T with the Riemann-von Mangoldt expression
/// theta(T)/pi + 1 + S(T).
RvmfCheck rvmf_check(const ZeroStore& store, double T, const EvalPrecision& prec = {});

/// Mean zero density log(gamma / 2pi) / 2pi used for tails beyond the table.
double zero_density(double gamma);

/// sum over all zeros (both signs of gamma) of 1 / (1 + (t - gamma)^2); zeros above t_max are
/// replaced by the mean density on the critical line.
double lorentz_zero_sum(const ZeroStore& store, double t);

}  // namespace zeta_eta
