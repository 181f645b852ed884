#include "widthslab/tractability.hpp"

#include <cmath>

#include "widthslab/errors.hpp"

namespace widthslab {

namespace {

// m / (1 + beta m^alpha) in full precision; g(0) = 0.
Real qpol_objective(const BigInt& m, const Real& alpha, const Real& beta) {
  if (m == 0) return Real(0);
  const Real mr(m);
  return mr / (1 + beta * exp(alpha * log(mr)));
}

bool normalized_equals_absolute(const MultiplierSequence& seq) {
  // The two criteria coincide exactly when the initial error is 1, which
  // holds for every family except sobolev-minus.
  return seq.spec.family != Family::SobolevMinus;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::OutOfScope: return "out-of-scope";
  }
  return "?";
}

QPolExponent qpol_exponent(const Real& alpha, const Real& beta) {
  if (!(beta > 0)) throw parameter_error("qpol_exponent: beta must be > 0");
  if (!(alpha > 0)) throw parameter_error("qpol_exponent: alpha must be > 0");
  if (alpha < 1)
    throw unsupported_error(
        "gevrey with alpha < 1 is not quasi-polynomially tractable; the exponent "
        "sup_m m/(1 + beta m^alpha) diverges");
  if (alpha == 1) return {Real(1) / beta, std::nullopt};  // sup, not attained

  // Continuous maximizer (beta (alpha-1))^{-1/alpha}; the integer argmax is
  // one of the neighbors (or the small-m corner cases).
  const Real cont = exp(-log(beta * (alpha - 1)) / alpha);
  const BigInt anchor = floor_big(cont);
  const BigInt candidates[] = {BigInt(0), BigInt(1), anchor, BigInt(anchor + 1)};
  BigInt best_m = 0;
  Real best = 0;
  for (const BigInt& m : candidates) {
    Real g = qpol_objective(m, alpha, beta);
    if (g > best) {  // strict: ties keep the smaller m (ascending candidates)
      best = g;
      best_m = m;
    }
  }
  return {best, best_m};
}

TractabilityReport classify(const MultiplierSequence& seq, ErrorCriterion crit) {
  TractabilityReport rep;
  rep.sequence = seq.spec.label();
  // Tractability quantifies over every d at once, so only the geometry of
  // the bound domain matters here.
  rep.domain = seq.dom.kind == Geometry::Sphere ? "sphere" : "ball";
  rep.criterion = criterion_name(crit);

  const bool sphere = seq.dom.kind == Geometry::Sphere;
  if (seq.spec.family == Family::Gevrey) {
    const bool qp = seq.spec.alpha >= 1;
    rep.weak = Status::Holds;
    rep.uniformly_weak = Status::Holds;
    rep.quasi_poly = qp ? Status::Holds : Status::Fails;
    rep.poly = Status::Fails;
    rep.strongly_poly = Status::Fails;
    rep.curse = Status::Fails;
    rep.st_region = "holds for every s > 0, t > 0 (uniformly weakly tractable)";
    rep.ec_region =
        "(t, ln^s)-weakly tractable iff (alpha > 1/s and t > 0) or (s > 0 and t > 1); "
        "EC-weakly tractable (s = t = 1) iff alpha > 1; EC-uniform weak tractability "
        "fails for every alpha, beta";
    if (qp) {
      QPolExponent q = qpol_exponent(seq.spec.alpha, seq.spec.beta);
      rep.t_qpol = q.value;
      rep.t_qpol_argmax = q.argmax;
    }
    rep.citations = sphere ? std::vector<std::string>{"Theorem 5.2", "Remark 5.3"}
                           : std::vector<std::string>{"Theorem 6.7"};
    return rep;
  }

  if (crit == ErrorCriterion::Normalized && !normalized_equals_absolute(seq)) {
    // sobolev-minus, normalized: the initial error ((d-1)/2)^{-r} shrinks so
    // fast that n(eps, d) >= 2^d within the flat d^{-r}-range of the
    // staircase: curse of dimensionality.
    rep.weak = Status::Fails;
    rep.uniformly_weak = Status::Fails;
    rep.quasi_poly = Status::Fails;
    rep.poly = Status::Fails;
    rep.strongly_poly = Status::Fails;
    rep.curse = Status::Holds;
    rep.st_region =
        "fails for every s > 0, t <= 1 (curse of dimensionality); t > 1 not classified";
    rep.ec_region = "not classified";
    rep.citations = {"Theorem 5.1(2)"};
    return rep;
  }

  // Sobolev forms under the absolute criterion (and normalized where the
  // initial error is 1, which makes the two coincide).
  const bool weak = seq.spec.r > 1;
  rep.weak = weak ? Status::Holds : Status::Fails;
  rep.uniformly_weak = Status::Fails;
  rep.quasi_poly = Status::Fails;
  rep.poly = Status::Fails;
  rep.strongly_poly = Status::Fails;
  rep.curse = Status::Fails;
  rep.st_region =
      "holds iff (s > 1/r and t > 0) or (s > 0 and t > 1); the closed region "
      "0 < s <= 1/r, 0 < t <= 1 fails, boundary s = 1/r included";
  rep.ec_region = "not classified";
  rep.citations = sphere ? std::vector<std::string>{"Theorem 5.1(1)"}
                         : std::vector<std::string>{"Theorem 6.6"};
  return rep;
}

bool implication_chain_ok(const TractabilityReport& rep) {
  const Status chain[] = {rep.strongly_poly, rep.poly, rep.quasi_poly, rep.uniformly_weak,
                          rep.weak};
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
    if (chain[i] == Status::Holds && chain[i + 1] == Status::Fails) return false;
  }
  if (rep.curse == Status::Holds && rep.weak == Status::Holds) return false;
  return true;
}

EmpiricalWeakLimit empirical_weak_limit(Geometry kind, const SequenceSpec& spec,
                                        ErrorCriterion crit, double s, double t,
                                        const std::vector<std::pair<LogValue, int>>& schedule,
                                        double tolerance) {
  if (!(s > 0 && t > 0)) throw parameter_error("empirical_weak_limit: s, t must be > 0");
  if (schedule.empty()) throw parameter_error("empirical_weak_limit: empty schedule");

  EmpiricalWeakLimit out;
  out.s = s;
  out.t = t;
  out.tolerance = tolerance;
  out.points.reserve(schedule.size());
  Real prev_key = -1;
  for (const auto& [eps, d] : schedule) {
    if (eps.is_zero()) throw parameter_error("empirical_weak_limit: eps must be positive");
    Real key = exp(-eps.log()) + d;
    if (!(key > prev_key))
      throw parameter_error("empirical_weak_limit: 1/eps + d must increase strictly");
    prev_key = key;
    MultiplierSequence seq(spec, GeometryDomain(kind, d));
    BigInt n = info_complexity(seq, eps, crit);
    double ratio = 0;
    if (n >= 1) {
      Real denom = exp(Real(-s) * eps.log()) + exp(Real(t) * log(Real(d)));
      ratio = (log_big(n) / denom).convert_to<double>();
    }
    out.points.push_back({key, d, n, ratio});
  }

  std::size_t tail_begin =
      out.points.size() - std::max<std::size_t>(1, out.points.size() / 5);
  out.tail_max = 0;
  for (std::size_t i = tail_begin; i < out.points.size(); ++i)
    out.tail_max = std::max(out.tail_max, out.points[i].ratio);
  out.below_tolerance = out.tail_max <= tolerance;

  // Analytic verdict for this (s, t).
  if (spec.family == Family::Gevrey) {
    out.verdict = Status::Holds;  // uniformly weak
  } else if (crit == ErrorCriterion::Normalized && spec.family == Family::SobolevMinus) {
    out.verdict = t <= 1 ? Status::Fails : Status::OutOfScope;
  } else {
    out.verdict = (Real(s) * spec.r > 1) || t > 1 ? Status::Holds : Status::Fails;
  }

  if (out.verdict == Status::OutOfScope) {
    out.note = "no published classification for this (s, t); empirical ratios only";
  } else {
    bool agree = (out.verdict == Status::Holds) == out.below_tolerance;
    out.note = std::string(agree ? "consistent" : "inconsistent") +
               " with the published classification (" + status_name(out.verdict) +
               ") at this schedule length; finite-range evidence, not a proof";
  }
  return out;
}

QpolBoundCheck qpol_bound_check(const SequenceSpec& spec, Geometry kind, double t,
                                const std::vector<std::pair<LogValue, int>>& grid) {
  if (spec.family != Family::Gevrey || spec.alpha < 1)
    throw unsupported_error("qpol_bound_check applies to gevrey with alpha >= 1");
  if (!(t > 0)) throw parameter_error("qpol_bound_check: t must be > 0");
  if (grid.empty()) throw parameter_error("qpol_bound_check: empty grid");

  QpolBoundCheck out;
  out.t = t;
  out.points.reserve(grid.size());
  out.sup_ratio = 0;
  for (const auto& [eps, d] : grid) {
    if (eps.is_zero()) throw parameter_error("qpol_bound_check: eps must be positive");
    MultiplierSequence seq(spec, GeometryDomain(kind, d));
    BigInt n = info_complexity(seq, eps, ErrorCriterion::Absolute);
    double ratio = 0;
    if (n >= 1) {
      // ln ratio = ln n - t (1 + ln d)(1 + ln 1/eps)
      Real ln_ratio =
          log_big(n) - Real(t) * (1 + log(Real(d))) * (1 - eps.log());
      ratio = exp(ln_ratio).convert_to<double>();
      if (ln_ratio > log(Real(2)))
        out.violations.push_back(out.points.size());
    }
    out.sup_ratio = std::max(out.sup_ratio, ratio);
    out.points.push_back({eps, d, std::move(n), ratio});
  }
  return out;
}

}  // namespace widthslab
