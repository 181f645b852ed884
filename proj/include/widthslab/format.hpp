#pragma once

#include <string>

#include "widthslab/logvalue.hpp"
#include "widthslab/numeric.hpp"

namespace widthslab {

// Significant-digit decimal rendering, deterministic across runs and
// platforms (pure software float). precision >= 1.
std::string format_real(const Real& x, int precision);

// Linear rendering of a LogValue, or "" when it is not representable in
// binary64 (|ln x| > 700). Exact zero renders as "0".
std::string format_linear(const LogValue& v, int precision);

}  // namespace widthslab
