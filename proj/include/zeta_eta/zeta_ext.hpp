#pragma once

// 50-digit zeta for oracle-grade checks.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "zeta_eta/types.hpp"

namespace zeta_eta {

using ExtReal = boost::multiprecision::cpp_bin_float_50;
using ExtComplex = boost::multiprecision::cpp_complex_50;

/// zeta(s) with |error| <= prec.abs_err down to 1e-30.
ExtComplex zeta_ext(const ExtComplex& s, const EvalPrecision& prec);

}  // namespace zeta_eta
