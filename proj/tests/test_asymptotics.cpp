#include <doctest.h>

#include <cmath>
#include <vector>

#include "widthslab/asymptotics.hpp"
#include "widthslab/errors.hpp"

using namespace widthslab;

namespace {

MultiplierSequence make(const std::string& spec, const std::string& dom) {
  return MultiplierSequence(parse_sequence(spec), parse_domain(dom));
}

std::vector<BigInt> geometric_schedule(double lo, double hi, int count) {
  std::vector<BigInt> ks;
  for (int i = 0; i < count; ++i) {
    double t = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (count - 1));
    BigInt k(static_cast<long long>(t + 0.5));
    if (ks.empty() || k > ks.back()) ks.push_back(k);
  }
  return ks;
}

}  // namespace

TEST_CASE("regime classification with exact boundaries") {
  CHECK(classify_regime(1, 10) == Regime::Single);
  CHECK(classify_regime(5, 10) == Regime::PreasymptoticSmall);
  CHECK(classify_regime(10, 10) == Regime::PreasymptoticLog);   // n = d
  CHECK(classify_regime(1023, 10) == Regime::PreasymptoticLog);
  CHECK(classify_regime(1024, 10) == Regime::Asymptotic);       // n = 2^d
  CHECK(classify_regime(2, 2) == Regime::PreasymptoticLog);     // small window empty
  CHECK(classify_regime(BigInt(1) << 200, 180) == Regime::Asymptotic);
  CHECK_THROWS_AS(classify_regime(0, 3), parameter_error);
  CHECK_THROWS_AS(classify_regime(5, 0), parameter_error);

  CHECK(std::string(regime_name(Regime::Single)) == "single");
  CHECK(std::string(regime_name(Regime::PreasymptoticSmall)) == "preasymptotic-small");
  CHECK(std::string(regime_name(Regime::PreasymptoticLog)) == "preasymptotic-log");
  CHECK(std::string(regime_name(Regime::Asymptotic)) == "asymptotic");
}

TEST_CASE("envelope: pinned values per regime") {
  EnvelopeValue e1 = envelope(make("sobolev-star:r=2", "sphere:d=5"), 1);
  CHECK(e1.regime == Regime::Single);
  CHECK(e1.value.is_one());
  CHECK(!e1.log_scale);

  EnvelopeValue e2 = envelope(make("sobolev-star:r=1", "sphere:d=10"), 5);
  CHECK(e2.regime == Regime::PreasymptoticSmall);
  CHECK(e2.value.linear().convert_to<double>() ==
        doctest::Approx(1 / std::sqrt(10.0)).epsilon(1e-13));

  // log window: (ln(1 + d/ln n) / ln n)^r, recomputed here independently
  EnvelopeValue e3 = envelope(make("sobolev-sharp:r=1", "sphere:d=100"), 100);
  CHECK(e3.regime == Regime::PreasymptoticLog);
  double expect = std::log(1 + 100 / std::log(100.0)) / std::log(100.0);
  CHECK(e3.value.linear().convert_to<double>() == doctest::Approx(expect).epsilon(1e-12));

  // flat family: d^{-r} everywhere short of the asymptotic window
  for (BigInt n : {BigInt(1), BigInt(3), BigInt(17), BigInt(31)}) {
    EnvelopeValue em = envelope(make("sobolev-minus:r=2", "sphere:d=5"), n);
    CHECK(em.value.linear().convert_to<double>() == doctest::Approx(0.04).epsilon(1e-13));
    CHECK(!em.log_scale);
  }

  // decay-exponent scale: beta d^alpha n^{alpha/d} = 1 * 10 * 1024^{1/10} = 20
  EnvelopeValue e4 = envelope(make("gevrey:alpha=1,beta=1", "ball:d=10"), 1024);
  CHECK(e4.regime == Regime::Asymptotic);
  CHECK(e4.log_scale);
  CHECK(e4.value.linear().convert_to<double>() == doctest::Approx(20.0).epsilon(1e-13));

  EnvelopeValue e5 = envelope(make("gevrey:alpha=0.7,beta=0.5", "sphere:d=10"), 5);
  CHECK(e5.regime == Regime::PreasymptoticSmall);
  CHECK(e5.log_scale);
  CHECK(e5.value.linear().convert_to<double>() == doctest::Approx(0.5).epsilon(1e-13));

  CHECK_THROWS_AS(envelope(make("sobolev-star:r=1", "sphere:d=2"), 0), parameter_error);
}

TEST_CASE("strong limit target: pinned") {
  CHECK(strong_limit_target(make("sobolev-star:r=1", "sphere:d=2")).is_one());
  CHECK(strong_limit_target(make("sobolev-star:r=2", "ball:d=3")).linear().convert_to<double>() ==
        doctest::Approx(std::pow(1.0 / 6.0, 2.0 / 3.0)).epsilon(1e-13));
  CHECK(strong_limit_target(make("gevrey:alpha=0.5,beta=1", "sphere:d=2")).is_one());
  // gamma = (2/d!)^{-alpha/d}: d = 3 gives 3^{alpha/3}
  CHECK(strong_limit_target(make("gevrey:alpha=0.6,beta=2", "sphere:d=3"))
            .linear()
            .convert_to<double>() == doctest::Approx(std::pow(3.0, 0.2)).epsilon(1e-13));
  CHECK_THROWS_AS(strong_limit_target(make("gevrey:alpha=1,beta=1", "sphere:d=2")),
                  unsupported_error);
  CHECK_THROWS_AS(strong_limit_target(make("gevrey:alpha=1.5,beta=1", "ball:d=3")),
                  unsupported_error);
}

TEST_CASE("scaled endpoints: closed form at k = 1 and exact sandwich") {
  auto [lo, hi] = scaled_endpoints(make("sobolev-star:r=1", "sphere:d=2"), 1);
  CHECK(lo.convert_to<double>() == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-13));
  CHECK(hi.convert_to<double>() == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-13));

  for (const char* spec : {"sobolev-star:r=1.5", "sobolev-minus:r=0.5",
                           "gevrey:alpha=0.5,beta=2", "gevrey:alpha=1,beta=1"}) {
    for (const char* dom : {"sphere:d=3", "ball:d=4"}) {
      MultiplierSequence seq = make(spec, dom);
      for (BigInt k = 1; k <= 50; ++k) {
        auto [a, b] = scaled_endpoints(seq, k);
        CHECK(a < b);  // cum(k-1) < cum(k) and the scaling factor is increasing
      }
    }
  }

  CHECK_THROWS_AS(scaled_endpoints(make("sobolev-star:r=1", "sphere:d=2"), 0),
                  parameter_error);
  CHECK_THROWS_AS(scaled_endpoints(make("gevrey:alpha=1.2,beta=1", "sphere:d=2"), 3),
                  unsupported_error);
}

TEST_CASE("strong equivalence check: converges where a limit exists") {
  std::vector<BigInt> ks = geometric_schedule(1, 1e6, 80);

  ConvergenceReport rep =
      check_strong_equivalence(make("sobolev-star:r=1", "sphere:d=2"), ks);
  CHECK(rep.target == doctest::Approx(1.0));
  CHECK(rep.tolerance == doctest::Approx(1e-3));
  CHECK(rep.samples.size() == ks.size());
  CHECK(rep.sandwich_ok);
  CHECK(rep.max_rel_dev_tail < 1e-4);
  CHECK(rep.converged);

  ConvergenceReport gev =
      check_strong_equivalence(make("gevrey:alpha=0.5,beta=1", "sphere:d=2"), ks);
  CHECK(gev.target == doctest::Approx(1.0));
  CHECK(gev.tolerance == doctest::Approx(1e-2));
  CHECK(gev.converged);
  CHECK(gev.sandwich_ok);

  // a one-point schedule at k = 1 is nowhere near the limit
  ConvergenceReport one =
      check_strong_equivalence(make("sobolev-star:r=1", "sphere:d=2"), {BigInt(1)});
  CHECK(one.samples.size() == 1);
  CHECK(!one.converged);

  MultiplierSequence s = make("sobolev-star:r=1", "sphere:d=2");
  CHECK_THROWS_AS(check_strong_equivalence(s, {}), parameter_error);
  CHECK_THROWS_AS(check_strong_equivalence(s, {BigInt(3), BigInt(3)}), parameter_error);
  CHECK_THROWS_AS(check_strong_equivalence(s, {BigInt(5), BigInt(2)}), parameter_error);
  CHECK_THROWS_AS(check_strong_equivalence(s, {BigInt(0), BigInt(2)}), parameter_error);
  CHECK_THROWS_AS(check_strong_equivalence(s, ks, std::nullopt, 0.0), parameter_error);
  CHECK_THROWS_AS(check_strong_equivalence(make("gevrey:alpha=1,beta=1", "sphere:d=2"), ks),
                  unsupported_error);
}

TEST_CASE("alpha = 1 subsequential limits: constants and finite-k witnesses") {
  auto [lo12, hi12] = alpha1_sublimits(Real(1), 2);
  CHECK(lo12.is_one());
  CHECK(hi12.linear().convert_to<double>() == doctest::Approx(std::exp(1.0)).epsilon(1e-13));

  auto [lo23, hi23] = alpha1_sublimits(Real(2), 3);
  CHECK(lo23.linear().convert_to<double>() == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  CHECK(hi23.linear().convert_to<double>() == doctest::Approx(std::exp(3.0)).epsilon(1e-13));

  auto [lo_eps, hi_eps] = alpha1_sublimits(Real("1e-9"), 3);
  CHECK(abs(lo_eps.log()) < 1e-8);
  CHECK(abs(hi_eps.log()) < 1e-8);

  CHECK_THROWS_AS(alpha1_sublimits(Real(0), 3), parameter_error);
  CHECK_THROWS_AS(alpha1_sublimits(Real(1), 1), parameter_error);

  // d = 2 closes the argument exactly: block starts sit at n = k^2, so the
  // scaled lower endpoint is e^{beta k} e^{-beta k} = 1 at EVERY k, and the
  // upper endpoint is e^{beta (k+1)} e^{-beta k} = e^{beta}. No limit, and
  // the lower constant cannot exceed 1.
  MultiplierSequence g2 = make("gevrey:alpha=1,beta=2", "sphere:d=2");
  for (BigInt k : {BigInt(10), BigInt(100), BigInt(1000)}) {
    auto [a, b] = scaled_endpoints(g2, k);
    CHECK(abs(a - 1).convert_to<double>() < 1e-12);
    CHECK(b.convert_to<double>() == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
  }

  // d = 3: endpoints approach the claimed pair (e^{beta/2}, e^{3 beta/2})
  MultiplierSequence g3 = make("gevrey:alpha=1,beta=1", "sphere:d=3");
  auto [lo3, hi3] = alpha1_sublimits(Real(1), 3);
  double dev3 = 0, dev4 = 0;
  {
    auto [a, b] = scaled_endpoints(g3, 1000);
    dev3 = std::max(std::abs((a / lo3.linear()).convert_to<double>() - 1),
                    std::abs((b / hi3.linear()).convert_to<double>() - 1));
  }
  {
    auto [a, b] = scaled_endpoints(g3, 10000);
    dev4 = std::max(std::abs((a / lo3.linear()).convert_to<double>() - 1),
                    std::abs((b / hi3.linear()).convert_to<double>() - 1));
  }
  CHECK(dev3 < 0.01);
  CHECK(dev4 < dev3);  // still improving at larger k
}

TEST_CASE("index surrogates track the exact staircase degree") {
  GeometryDomain s2(Geometry::Sphere, 2);
  RegimeIndexEquivalents a = regime_index_equivalents(s2, 1);
  CHECK(a.regime == Regime::Single);
  CHECK(a.m_exact == 0);
  CHECK(a.m_log == 0);
  CHECK(a.m_asym.convert_to<double>() == doctest::Approx(2.0));

  CHECK(regime_index_equivalents(s2, 2).m_exact == 1);
  CHECK(regime_index_equivalents(s2, 9).m_exact == 2);
  CHECK(regime_index_equivalents(GeometryDomain(Geometry::Sphere, 5), 2).m_exact == 1);

  // asymptotic window: m_exact / (d n^{1/d}) stays within a modest band
  RegimeIndexEquivalents big =
      regime_index_equivalents(GeometryDomain(Geometry::Sphere, 20), BigInt(1) << 30);
  CHECK(big.regime == Regime::Asymptotic);
  double ratio = (Real(big.m_exact.str()) / big.m_asym).convert_to<double>();
  CHECK(ratio >= 1 / (2 * std::exp(1.0)));
  CHECK(ratio <= 1.0);

  // log window: the closed-form surrogate is within a factor 4 of exact
  struct Probe { int d; BigInt n; };
  for (const Probe& p : {Probe{2, 9}, Probe{10, 1000}, Probe{40, BigInt(1) << 39}}) {
    RegimeIndexEquivalents e = regime_index_equivalents(GeometryDomain(Geometry::Sphere, p.d), p.n);
    CHECK(e.regime == Regime::PreasymptoticLog);
    double rr = (Real(e.m_exact.str()) / e.m_log).convert_to<double>();
    CHECK(rr > 0.25);
    CHECK(rr < 4.0);
  }

  CHECK_THROWS_AS(regime_index_equivalents(s2, 0), parameter_error);
}

TEST_CASE("envelope ratio sweep: anchored at 1, uniformly bounded spread") {
  // n = 1: a_1 = 1 and the envelope is 1, so the ratio is exactly 1
  RatioSweep unit = envelope_ratio_sweep(Geometry::Sphere, parse_sequence("sobolev-star:r=1"),
                                         {{BigInt(1), 7}});
  REQUIRE(unit.points.size() == 1);
  CHECK(unit.points[0].ratio == 1.0);
  CHECK(unit.global.min == 1.0);
  CHECK(unit.by_regime[0].count == 1);

  // gevrey anchors at 0 instead (-ln a_1 = 0)
  RatioSweep gz = envelope_ratio_sweep(Geometry::Sphere, parse_sequence("gevrey:alpha=0.8,beta=1"),
                                       {{BigInt(1), 6}, {BigInt(50), 6}});
  CHECK(gz.points[0].ratio == 0.0);
  CHECK(gz.points[1].ratio > 0.0);

  // two-sided uniformity across dimensions and all four windows
  std::vector<std::pair<BigInt, int>> grid;
  for (int d = 2; d <= 38; d += 6) {
    Real hi = exp(Real(d + 4) * log(Real(2)));
    BigInt top(hi.convert_to<BigInt>());
    std::vector<BigInt> ns;
    for (int i = 0; i <= 24; ++i) {
      Real t = exp(log(Real(top)) * i / 24);
      BigInt n(t.convert_to<BigInt>());
      if (n < 1) n = 1;
      if (ns.empty() || n > ns.back()) ns.push_back(n);
    }
    for (const BigInt& n : ns) grid.push_back({n, d});
  }
  RatioSweep sweep =
      envelope_ratio_sweep(Geometry::Sphere, parse_sequence("sobolev-star:r=1"), grid);
  CHECK(sweep.global.count == grid.size());
  CHECK(sweep.global.min > 0);
  CHECK(sweep.global.max / sweep.global.min < 100.0);
  for (const RatioPoint& p : sweep.points) CHECK(p.regime == classify_regime(p.n, p.d));

  // deterministic output independent of thread scheduling
  RatioSweep again =
      envelope_ratio_sweep(Geometry::Sphere, parse_sequence("sobolev-star:r=1"), grid);
  REQUIRE(again.points.size() == sweep.points.size());
  for (std::size_t i = 0; i < sweep.points.size(); ++i)
    CHECK(again.points[i].ratio == sweep.points[i].ratio);

  CHECK_THROWS_AS(
      envelope_ratio_sweep(Geometry::Sphere, parse_sequence("sobolev-star:r=1"), {}),
      parameter_error);
}
