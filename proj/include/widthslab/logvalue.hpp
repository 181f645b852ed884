#pragma once

#include <compare>
#include <optional>

#include "widthslab/errors.hpp"
#include "widthslab/numeric.hpp"

namespace widthslab {

// A nonnegative real carried in the log domain. Exact zero is a dedicated
// state (log undefined), exact one is finite with log == 0. Every multiplier
// value, approximation number, and threshold in this library is a LogValue;
// magnitudes like e^{-1e6} are routine, so nothing here may round-trip
// through a linear double except the explicitly guarded accessor.
class LogValue {
public:
  LogValue() : zero_(true), log_(0) {}  // zero

  static LogValue zero() { return LogValue(); }
  static LogValue one() { return from_log(Real(0)); }
  static LogValue from_log(Real ln) {
    LogValue v;
    v.zero_ = false;
    v.log_ = std::move(ln);
    return v;
  }
  // Linear constructor for human-scale inputs (CLI thresholds etc.).
  static LogValue from_linear(const Real& x) {
    if (x < 0) throw parameter_error("LogValue: negative linear value");
    if (x == 0) return zero();
    return from_log(boost::multiprecision::log(x));  // member log() shadows the free fn
  }

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && log_ == 0; }

  // Natural log; only meaningful in the finite state.
  const Real& log() const {
    if (zero_) throw parameter_error("LogValue: log of exact zero");
    return log_;
  }

  // Full-precision linear value. Safe only when the caller knows the
  // magnitude is tame; fine for values near 1 (scaled limits, ratios).
  Real linear() const { return zero_ ? Real(0) : exp(log_); }

  // Linear value as binary64 when representable; the emission cutoff is
  // |ln x| <= 700 (outputs below e^{-700} keep only their log field).
  std::optional<double> linear_double() const {
    if (zero_) return 0.0;
    if (log_ < -700 || log_ > 700) return std::nullopt;
    return exp(log_).convert_to<double>();
  }

  // Ordering agrees with the represented values: zero < every finite value.
  friend bool operator==(const LogValue& a, const LogValue& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.log_ == b.log_;
  }
  friend bool operator<(const LogValue& a, const LogValue& b) {
    if (a.zero_) return !b.zero_;
    if (b.zero_) return false;
    return a.log_ < b.log_;
  }
  friend bool operator<=(const LogValue& a, const LogValue& b) { return a == b || a < b; }
  friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
  friend bool operator>=(const LogValue& a, const LogValue& b) { return b <= a; }

  LogValue operator*(const LogValue& rhs) const {
    if (zero_ || rhs.zero_) return zero();
    return from_log(log_ + rhs.log_);
  }
  LogValue operator/(const LogValue& rhs) const {
    if (rhs.zero_) throw parameter_error("LogValue: division by exact zero");
    if (zero_) return zero();
    return from_log(log_ - rhs.log_);
  }
  // x^e for real e; 0^e is zero for e > 0, one for e == 0, undefined below.
  LogValue pow(const Real& e) const {
    if (zero_) {
      if (e > 0) return zero();
      if (e == 0) return one();
      throw parameter_error("LogValue: zero raised to a negative power");
    }
    return from_log(log_ * e);
  }

private:
  bool zero_;
  Real log_;
};

}  // namespace widthslab
