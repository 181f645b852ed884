#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace widthslab {

// Exact integer for dimension counts and indices; these routinely exceed
// 64 bits (C(d,m) grows like (m/d)^d) and every staircase comparison must be
// exact, so no floating type is ever allowed to stand in for one of these.
using BigInt = boost::multiprecision::cpp_int;

// Working real: 50 significant decimal digits. The artifact-wide contract is
// >= 30 digits; the extra headroom makes 1e-12-relative claims about
// quantities with logs of size ~1e6 trivially safe.
using Real = boost::multiprecision::cpp_bin_float_50;

// Natural log of a positive big integer. The conversion BigInt -> Real keeps
// the top 166 mantissa bits and the binary exponent (top-limb refinement),
// so the result is correct to ~1e-49 relative no matter how large n is.
// Must never be routed through double: bit lengths beyond 1024 would overflow.
Real log_big(const BigInt& n);

// ln(1 + e^t) evaluated stably for any sign and size of t.
Real log1p_exp(const Real& t);

// Largest integer <= x, as an exact BigInt (x may exceed any machine range).
BigInt floor_big(const Real& x);

}  // namespace widthslab
