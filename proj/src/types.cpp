#include "zeta_eta/types.hpp"

namespace zeta_eta {

void EvalPrecision::validate() const {
  if (!(abs_err >= 1e-30 && abs_err <= 1e-3))
    throw Error(Errc::InvalidArgument, "abs_err must lie in [1e-30, 1e-3]");
  if (max_terms < 16) throw Error(Errc::InvalidArgument, "max_terms must be at least 16");
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::PoleAtOne: return "PoleAtOne";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NearSingularity: return "NearSingularity";
    case Errc::OnSingularity: return "OnSingularity";
    case Errc::ParseError: return "ParseError";
    case Errc::NotSorted: return "NotSorted";
    case Errc::EmptyFile: return "EmptyFile";
    case Errc::IoError: return "IoError";
    case Errc::BeyondTable: return "BeyondTable";
    case Errc::OutOfStrip: return "OutOfStrip";
    case Errc::OnOrdinate: return "OnOrdinate";
    case Errc::InvalidFamily: return "InvalidFamily";
    case Errc::OnNegativeRealAxisCut: return "OnNegativeRealAxisCut";
    case Errc::BeyondSieve: return "BeyondSieve";
    case Errc::ZeroCoincidesWithS: return "ZeroCoincidesWithS";
    case Errc::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

}  // namespace zeta_eta
