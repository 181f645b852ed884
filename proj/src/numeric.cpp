#include "widthslab/numeric.hpp"

#include "widthslab/errors.hpp"

namespace widthslab {

Real log_big(const BigInt& n) {
  if (n <= 0) throw parameter_error("log_big: argument must be positive");
  return log(Real(n));
}

Real log1p_exp(const Real& t) {
  // For t >= 0: ln(1+e^t) = t + ln(1+e^-t); keeps the argument of log1p in
  // (0,1] and never forms an astronomically large intermediate.
  if (t >= 0) return t + boost::multiprecision::log1p(exp(-t));
  return boost::multiprecision::log1p(exp(t));
}

BigInt floor_big(const Real& x) {
  BigInt n = x.convert_to<BigInt>();  // truncates toward zero
  if (Real(n) > x) n -= 1;
  return n;
}

}  // namespace widthslab
