#pragma once

#include <vector>

#include "widthslab/multipliers.hpp"

namespace widthslab {

// Absolute: stop once e(n) <= eps. Normalized: stop once e(n) <= eps e(0).
enum class ErrorCriterion { Absolute, Normalized };

const char* criterion_name(ErrorCriterion c);

// Information complexity n(eps) = min{ n >= 0 : e(n) <= eps * CRI }, where
// e(n) = a_{n+1} and CRI is 1 (absolute) or the initial error (normalized).
// Exact: the answer is the cumulative dimension below the crossing degree,
// so the tie rule e(n) <= threshold is inherited from the degree search.
BigInt info_complexity(const MultiplierSequence& seq, const LogValue& eps, ErrorCriterion crit);

struct CurseRow {
  int d;
  BigInt n;
  bool at_least_2_pow_d;  // n >= 2^d, exact comparison
};

// n(eps, d) across dimensions for a fixed family/criterion/threshold; the
// flag witnesses (or refutes) curse-of-dimensionality growth.
std::vector<CurseRow> curse_witness(Geometry kind, const SequenceSpec& spec,
                                    ErrorCriterion crit, const LogValue& eps,
                                    const std::vector<int>& dims);

}  // namespace widthslab
