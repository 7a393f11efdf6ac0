#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zeta_eta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Target accuracy for a single evaluation.
struct EvalPrecision {
  double abs_err = 1e-10;
  long max_terms = 1L << 22;

  /// Throws InvalidArgument unless abs_err is in [1e-30, 1e-3] and max_terms >= 16.
  void validate() const;
};

enum class Errc {
  InvalidArgument,
  PoleAtOne,
  BudgetExceeded,
  NearSingularity,
  OnSingularity,
  ParseError,
  NotSorted,
  EmptyFile,
  IoError,
  BeyondTable,
  OutOfStrip,
  OnOrdinate,
  InvalidFamily,
  OnNegativeRealAxisCut,
  BeyondSieve,
  ZeroCoincidesWithS,
  HypothesisViolated,
};

std::string_view errc_name(Errc code);

/// Every library failure is reported through this exception; `code()` says which contract broke.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<long> line = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  /// 1-based input line for parse/validation errors.
  std::optional<long> line() const noexcept { return line_; }

 private:
  Errc code_;
  std::optional<long> line_;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace zeta_eta
