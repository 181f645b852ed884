#include "widthslab/asymptotics.hpp"

#include <cassert>
#include <cmath>

#include "widthslab/errors.hpp"
#include "widthslab/util.hpp"

namespace widthslab {

namespace {

Real log_factorial(int d) {
  BigInt f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return log_big(f);
}

// ln of the strong-equivalence constant before the r/d (resp. -alpha/d)
// power: ln(2/d!) on the sphere, ln(1/d!) on the ball.
Real log_block_density(const GeometryDomain& dom) {
  static const Real ln2 = log(Real(2));
  Real v = -log_factorial(dom.d);
  if (dom.kind == Geometry::Sphere) v += ln2;
  return v;
}

void require_gevrey_limit_exists(const MultiplierSequence& seq) {
  if (seq.spec.family == Family::Gevrey && !(seq.spec.alpha < 1))
    throw unsupported_error(
        "no strong-equivalence limit for gevrey with alpha >= 1 (Remark 3.4: the two "
        "staircase endpoint sequences keep distinct limits at alpha = 1, and for "
        "alpha > 1 even weak asymptotics fail)");
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Single: return "single";
    case Regime::PreasymptoticSmall: return "preasymptotic-small";
    case Regime::PreasymptoticLog: return "preasymptotic-log";
    case Regime::Asymptotic: return "asymptotic";
  }
  return "?";
}

Regime classify_regime(const BigInt& n, int d) {
  if (n < 1) throw parameter_error("classify_regime: n must be >= 1");
  if (d < 1) throw parameter_error("classify_regime: d must be >= 1");
  if (n == 1) return Regime::Single;
  if (n < d) return Regime::PreasymptoticSmall;
  if (n < BigInt(1) << d) return Regime::PreasymptoticLog;
  return Regime::Asymptotic;
}

EnvelopeValue envelope(const MultiplierSequence& seq, const BigInt& n) {
  if (n < 1) throw parameter_error("envelope: n must be >= 1");
  const int d = seq.dom.d;
  const Regime regime = classify_regime(n, d);
  const Real dr(d);
  const Real lnd = log(dr);
  using boost::multiprecision::log1p;

  // ln of the two index-dependent pieces, defined whenever n >= 2:
  //   inner = ln(1 + d/ln n) / ln n      (preasymptotic-log window)
  //   tail  = n^{1/d}                    (asymptotic window)
  auto log_inner = [&] {
    const Real L = log_big(n);
    return log(log1p(dr / L)) - log(L);
  };
  auto log_tail = [&] { return log_big(n) / dr; };

  const SequenceSpec& s = seq.spec;
  switch (s.family) {
    case Family::SobolevStar:
    case Family::SobolevPlus:
      switch (regime) {
        case Regime::Single: return {regime, LogValue::one(), false};
        case Regime::PreasymptoticSmall:
          return {regime, LogValue::from_log(-s.r / 2 * lnd), false};
        case Regime::PreasymptoticLog:
          return {regime, LogValue::from_log(-s.r / 2 * lnd + s.r / 2 * log_inner()), false};
        case Regime::Asymptotic:
          return {regime, LogValue::from_log(-s.r * lnd - s.r * log_tail()), false};
      }
      break;
    case Family::SobolevSharp:
      switch (regime) {
        case Regime::Single:
        case Regime::PreasymptoticSmall: return {regime, LogValue::one(), false};
        case Regime::PreasymptoticLog:
          return {regime, LogValue::from_log(s.r * log_inner()), false};
        case Regime::Asymptotic:
          return {regime, LogValue::from_log(-s.r * lnd - s.r * log_tail()), false};
      }
      break;
    case Family::SobolevMinus:
      if (regime == Regime::Asymptotic)
        return {regime, LogValue::from_log(-s.r * lnd - s.r * log_tail()), false};
      return {regime, LogValue::from_log(-s.r * lnd), false};
    case Family::Gevrey: {
      const Real lnb = log(s.beta);
      switch (regime) {
        case Regime::Single:
        case Regime::PreasymptoticSmall: return {regime, LogValue::from_log(lnb), true};
        case Regime::PreasymptoticLog:
          return {regime, LogValue::from_log(lnb - s.alpha * log_inner()), true};
        case Regime::Asymptotic:
          return {regime, LogValue::from_log(lnb + s.alpha * lnd + s.alpha * log_tail()), true};
      }
      break;
    }
  }
  throw parameter_error("envelope: unknown family");
}

LogValue strong_limit_target(const MultiplierSequence& seq) {
  require_gevrey_limit_exists(seq);
  const Real base = log_block_density(seq.dom);
  const Real dr(seq.dom.d);
  if (is_sobolev(seq.spec.family)) return LogValue::from_log(seq.spec.r / dr * base);
  return LogValue::from_log(-seq.spec.alpha / dr * base);  // gamma
}

std::pair<Real, Real> scaled_endpoints(const MultiplierSequence& seq, const BigInt& k) {
  if (k < 1) throw parameter_error("scaled_endpoints: k must be >= 1");
  if (seq.spec.family == Family::Gevrey && seq.spec.alpha > 1)
    throw unsupported_error("scaled endpoints are defined for gevrey alpha <= 1 only");
  const Real dr(seq.dom.d);
  const BigInt cum_lo = cumulative_dim(seq.dom, k - 1);
  const BigInt cum_hi = cumulative_dim(seq.dom, k);
  const Real ln_lambda = lambda(seq, k).log();
  if (is_sobolev(seq.spec.family)) {
    const Real e = seq.spec.r / dr;
    return {exp(e * log_big(cum_lo) + ln_lambda), exp(e * log_big(cum_hi) + ln_lambda)};
  }
  // e^{beta gamma n^{alpha/d}} a_n with ln gamma = -(alpha/d) ln(2/d! or 1/d!)
  const Real ln_gamma = -seq.spec.alpha / dr * log_block_density(seq.dom);
  auto scaled = [&](const BigInt& n) {
    Real bump = seq.spec.beta * exp(ln_gamma + seq.spec.alpha / dr * log_big(n));
    return exp(bump + ln_lambda);  // ln_lambda = -beta k^alpha
  };
  return {scaled(cum_lo), scaled(cum_hi)};
}

ConvergenceReport check_strong_equivalence(const MultiplierSequence& seq,
                                           const std::vector<BigInt>& k_schedule,
                                           std::optional<double> tolerance,
                                           double tail_fraction) {
  require_gevrey_limit_exists(seq);
  if (k_schedule.empty()) throw parameter_error("check_strong_equivalence: empty schedule");
  for (std::size_t i = 0; i < k_schedule.size(); ++i) {
    if (k_schedule[i] < 1) throw parameter_error("check_strong_equivalence: k must be >= 1");
    if (i && k_schedule[i] <= k_schedule[i - 1])
      throw parameter_error("check_strong_equivalence: schedule must be ascending");
  }
  if (!(tail_fraction > 0 && tail_fraction <= 1))
    throw parameter_error("check_strong_equivalence: tail_fraction in (0, 1]");

  ConvergenceReport rep;
  const bool sobolev = is_sobolev(seq.spec.family);
  rep.label = seq.spec.label() + " on " + seq.dom.name();
  rep.target = sobolev ? strong_limit_target(seq).linear().convert_to<double>() : 1.0;
  rep.tolerance = tolerance.value_or(sobolev ? 1e-3 : 1e-2);
  rep.tail_fraction = tail_fraction;

  rep.samples.resize(k_schedule.size());
  rep.sandwich_ok = true;
  for (std::size_t i = 0; i < k_schedule.size(); ++i) {
    auto [lo, hi] = scaled_endpoints(seq, k_schedule[i]);
    if (!(lo < hi)) rep.sandwich_ok = false;  // strict: cum(k-1) < cum(k)
    rep.samples[i] = {k_schedule[i], lo.convert_to<double>(), hi.convert_to<double>()};
  }

  std::size_t tail_begin =
      rep.samples.size() - std::max<std::size_t>(1, static_cast<std::size_t>(
                                                        rep.samples.size() * tail_fraction));
  double max_dev = 0;
  for (std::size_t i = tail_begin; i < rep.samples.size(); ++i) {
    max_dev = std::max(max_dev, std::abs(rep.samples[i].lower / rep.target - 1));
    max_dev = std::max(max_dev, std::abs(rep.samples[i].upper / rep.target - 1));
  }
  rep.max_rel_dev_tail = max_dev;
  rep.converged = max_dev <= rep.tolerance;
  return rep;
}

std::pair<LogValue, LogValue> alpha1_sublimits(const Real& beta, int d) {
  if (!(beta > 0)) throw parameter_error("alpha1_sublimits: beta must be > 0");
  if (d < 2) throw parameter_error("alpha1_sublimits: d must be >= 2 (sphere)");
  return {LogValue::from_log(beta * (d - 2) / 2), LogValue::from_log(beta * Real(d) / 2)};
}

RegimeIndexEquivalents regime_index_equivalents(const GeometryDomain& dom, const BigInt& n) {
  if (n < 1) throw parameter_error("regime_index_equivalents: n must be >= 1");
  RegimeIndexEquivalents out{classify_regime(n, dom.d), degree_for_index(dom, n), Real(0),
                             Real(0)};
  const Real dr(dom.d);
  if (n > 1) {
    const Real L = log_big(n);
    out.m_log = L / (1 + log(dr / L));
  }
  out.m_asym = dr * exp(log_big(n) / dr);
  return out;
}

RatioSweep envelope_ratio_sweep(Geometry kind, const SequenceSpec& spec,
                                const std::vector<std::pair<BigInt, int>>& grid) {
  if (grid.empty()) throw parameter_error("envelope_ratio_sweep: empty grid");
  RatioSweep sweep;
  sweep.points.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto& [n, d] = grid[i];
    MultiplierSequence seq(spec, GeometryDomain(kind, d));
    EnvelopeValue env = envelope(seq, n);
    double ratio;
    if (env.log_scale) {
      // gevrey: compare decay exponents; -ln a_1 = 0 gives ratio 0 at n = 1
      LogValue a = approx_number(seq, n);
      ratio = a.is_one()
                  ? 0.0
                  : exp(log(-a.log()) - env.value.log()).convert_to<double>();
    } else {
      ratio = exp(approx_number(seq, n).log() - env.value.log()).convert_to<double>();
    }
    sweep.points[i] = {n, d, env.regime, ratio};
  });

  auto fold = [](RatioStats& s, double r) {
    if (s.count == 0) {
      s.min = s.max = r;
    } else {
      s.min = std::min(s.min, r);
      s.max = std::max(s.max, r);
    }
    ++s.count;
  };
  for (const auto& p : sweep.points) {
    fold(sweep.global, p.ratio);
    fold(sweep.by_regime[static_cast<std::size_t>(p.regime)], p.ratio);
  }
  return sweep;
}

}  // namespace widthslab
