#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthslab/complexity.hpp"

namespace widthslab {

enum class Status { Holds, Fails, OutOfScope };

const char* status_name(Status s);

// sup_m m / (1 + beta m^alpha), the quasi-polynomial exponent for gevrey
// sequences with alpha >= 1. For alpha = 1 the sup is 1/beta exactly and is
// not attained (argmax empty); for alpha > 1 it is attained at an integer
// near the continuous maximizer (beta (alpha-1))^{-1/alpha}, ties resolved
// to the smaller m.
struct QPolExponent {
  Real value;
  std::optional<BigInt> argmax;
};

QPolExponent qpol_exponent(const Real& alpha, const Real& beta);

// Classification of one (family, domain, criterion) triple. Every status is
// a published result (citations carry the theorem tags); OutOfScope marks
// questions the source results do not answer.
struct TractabilityReport {
  std::string sequence;
  std::string domain;
  std::string criterion;

  Status weak;
  Status uniformly_weak;
  Status quasi_poly;
  Status poly;
  Status strongly_poly;
  Status curse;

  // (s,t)-weak tractability region, human-readable. The closed boundary
  // s = 1/r with t <= 1 counts as Fails for the sobolev families.
  std::string st_region;
  // Exponential-convergence tractability summary (gevrey only).
  std::string ec_region;

  std::optional<Real> t_qpol;
  std::optional<BigInt> t_qpol_argmax;

  std::vector<std::string> citations;
};

TractabilityReport classify(const MultiplierSequence& seq,
                            ErrorCriterion crit = ErrorCriterion::Absolute);

// strongly_poly => poly => quasi_poly => uniformly_weak => weak, and
// curse => not weak. OutOfScope entries are exempt.
bool implication_chain_ok(const TractabilityReport& rep);

// One empirical ratio ln n(eps,d) / ((1/eps)^s + d^t).
struct WeakLimitPoint {
  Real inv_eps_plus_d;  // validation key: must increase strictly
  int d;
  BigInt n;
  double ratio;
};

struct EmpiricalWeakLimit {
  double s;
  double t;
  std::vector<WeakLimitPoint> points;
  double tail_max;        // max ratio over the last fifth of the schedule
  bool below_tolerance;   // tail_max <= tolerance
  double tolerance;
  Status verdict;         // analytic classification for this (s, t)
  std::string note;       // "consistent with ..." / "inconsistent with ..."
};

// Evaluates the weak-tractability ratio along a schedule of (eps, d) with
// 1/eps + d strictly increasing. Empirical evidence only; the verdict field
// is the theorem, the samples can merely agree with it.
EmpiricalWeakLimit empirical_weak_limit(Geometry kind, const SequenceSpec& spec,
                                        ErrorCriterion crit, double s, double t,
                                        const std::vector<std::pair<LogValue, int>>& schedule,
                                        double tolerance = 0.05);

struct QpolBoundPoint {
  LogValue eps;
  int d;
  BigInt n;
  double ratio;  // n / e^{t (1+ln d)(1+ln 1/eps)}
};

struct QpolBoundCheck {
  double t;
  std::vector<QpolBoundPoint> points;
  double sup_ratio;
  std::vector<std::size_t> violations;  // indices with ratio > 2
};

// Checks n(eps,d) <= 2 e^{t (1+ln d)(1+ln 1/eps)} over a grid, for gevrey
// alpha >= 1. At t = t_qpol there must be no violations; below it the
// ratios witness unbounded growth.
QpolBoundCheck qpol_bound_check(const SequenceSpec& spec, Geometry kind, double t,
                                const std::vector<std::pair<LogValue, int>>& grid);

}  // namespace widthslab
