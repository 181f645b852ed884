#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "widthslab/widths.hpp"

namespace widthslab {

// Where an index n sits relative to the dimension d. Boundaries belong to
// the later regime: n = d is PreasymptoticLog, n = 2^d is Asymptotic.
enum class Regime { Single, PreasymptoticSmall, PreasymptoticLog, Asymptotic };

const char* regime_name(Regime r);

// Single for n = 1, PreasymptoticSmall for 2 <= n < d,
// PreasymptoticLog for d <= n < 2^d, Asymptotic for n >= 2^d (exact 2^d).
Regime classify_regime(const BigInt& n, int d);

// Two-sided envelope value at index n. For the Sobolev families `value`
// bounds a_n itself; for gevrey it bounds -ln a_n (the decay exponent), and
// `log_scale` is set. Natural logs throughout.
//
//   star/plus   1 | d^{-r/2} | d^{-r/2} (ln(1+d/ln n)/ln n)^{r/2} | d^{-r} n^{-r/d}
//   sharp       1 |    1     |          (ln(1+d/ln n)/ln n)^r     | d^{-r} n^{-r/d}
//   minus     d^{-r} through 2^d                                  | d^{-r} n^{-r/d}
//   gevrey     beta |  beta  | beta (ln n/ln(1+d/ln n))^alpha     | beta d^alpha n^{alpha/d}
struct EnvelopeValue {
  Regime regime;
  LogValue value;
  bool log_scale;
};

EnvelopeValue envelope(const MultiplierSequence& seq, const BigInt& n);

// The strong-equivalence constant for the bound sequence:
//   sobolev          lim n^{r/d} a_n = (2/d!)^{r/d} (sphere), (1/d!)^{r/d} (ball)
//   gevrey, a < 1    the scaling constant gamma with e^{beta gamma n^{a/d}} a_n -> 1:
//                    (2/d!)^{-a/d} (sphere), (1/d!)^{-a/d} (ball)
// gevrey with alpha >= 1 has no such limit and is rejected.
LogValue strong_limit_target(const MultiplierSequence& seq);

// The scaled quantity at both endpoints of staircase block k (k >= 1):
// n^{r/d} a_n (sobolev) or e^{beta gamma n^{alpha/d}} a_n (gevrey, alpha <= 1),
// evaluated at n = cum(k-1) and n = cum(k). Values are O(1) by design.
std::pair<Real, Real> scaled_endpoints(const MultiplierSequence& seq, const BigInt& k);

struct EndpointSample {
  BigInt k;
  double lower;
  double upper;
};

// Convergence evidence for the scaled endpoint sequences. `target` is
// strong_limit_target for sobolev and 1 for gevrey; the tail window is the
// last tail_fraction of the schedule; sandwich_ok records that the exact
// bracket lower < upper held at every k.
struct ConvergenceReport {
  std::string label;
  double target;
  std::vector<EndpointSample> samples;
  double tolerance;
  double tail_fraction;
  double max_rel_dev_tail;
  bool converged;
  bool sandwich_ok;
};

// k_schedule must be ascending, each k >= 1. Default tolerance: 1e-3 for
// sobolev, 1e-2 for gevrey (slower convergence as alpha -> 1).
ConvergenceReport check_strong_equivalence(const MultiplierSequence& seq,
                                           const std::vector<BigInt>& k_schedule,
                                           std::optional<double> tolerance = std::nullopt,
                                           double tail_fraction = 0.2);

// The two subsequential limits of e^{beta gamma n^{1/d}} a_n for gevrey
// alpha = 1 on the sphere, along block starts and block ends:
//   (e^{beta (d-2)/2}, e^{beta d/2}).
// The lower constant corrects a published misprint ((d-1)^2/(2d)): for d = 2
// the block-start sequence is identically 1, which forces (d-2)/2. The block
// ends and starts stay separated by the factor e^{beta} forever, which is
// exactly why no single strong limit exists at alpha = 1.
std::pair<LogValue, LogValue> alpha1_sublimits(const Real& beta, int d);

// Exact staircase degree vs the two closed-form index surrogates:
//   m_log  = ln n / (1 + ln(d / ln n))   (preasymptotic-log window)
//   m_asym = d n^{1/d}                   (asymptotic window)
struct RegimeIndexEquivalents {
  Regime regime;
  BigInt m_exact;
  Real m_log;   // 0 when n = 1
  Real m_asym;
};

RegimeIndexEquivalents regime_index_equivalents(const GeometryDomain& dom, const BigInt& n);

// Ratio of the true value to its envelope over a grid: a_n / envelope for
// sobolev, (-ln a_n) / envelope for gevrey (0 at n = 1 where -ln a_1 = 0).
struct RatioStats {
  std::size_t count = 0;
  double min = 0;
  double max = 0;
};

struct RatioPoint {
  BigInt n;
  int d;
  Regime regime;
  double ratio;
};

struct RatioSweep {
  std::vector<RatioPoint> points;
  RatioStats global;
  std::array<RatioStats, 4> by_regime;  // indexed by Regime
};

// Evaluates every (n, d) grid point with the spec parameters re-bound to
// each d. Deterministic output order (grid order) regardless of threading.
RatioSweep envelope_ratio_sweep(Geometry kind, const SequenceSpec& spec,
                                const std::vector<std::pair<BigInt, int>>& grid);

}  // namespace widthslab
