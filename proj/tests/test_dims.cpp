#include <doctest.h>

#include "widthslab/dims.hpp"
#include "widthslab/errors.hpp"

using namespace widthslab;

namespace {

// Independent oracle: exact binomial via the multiplicative recurrence.
BigInt binom(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (BigInt i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact at every step: out is binom(n-k+i, i)
  }
  return out;
}

GeometryDomain sphere(int d) { return GeometryDomain(Geometry::Sphere, d); }
GeometryDomain ball(int d) { return GeometryDomain(Geometry::Ball, d); }

}  // namespace

TEST_CASE("domain validation and naming") {
  CHECK(sphere(2).name() == "sphere:d=2");
  CHECK(ball(1).name() == "ball:d=1");
  CHECK_THROWS_AS(sphere(1), parameter_error);
  CHECK_THROWS_AS(ball(0), parameter_error);

  CHECK(parse_domain("sphere:d=7").d == 7);
  CHECK(parse_domain("ball:d=3").kind == Geometry::Ball);
  CHECK_THROWS_AS(parse_domain("cube:d=2"), parse_error);
  CHECK_THROWS_AS(parse_domain("sphere"), parse_error);
  CHECK_THROWS_AS(parse_domain("sphere:d=x"), parse_error);
  CHECK_THROWS_AS(parse_domain("sphere:d=1"), parse_error);  // value errors share the grammar code path
  CHECK_THROWS_AS(parse_domain("sphere:r=2"), parse_error);
}

TEST_CASE("eigenspace dimensions: pinned values") {
  CHECK(eigenspace_dim(sphere(2), 0) == 1);
  CHECK(eigenspace_dim(sphere(2), 2) == 5);
  CHECK(eigenspace_dim(ball(3), 2) == 6);
  CHECK_THROWS_AS(eigenspace_dim(sphere(2), BigInt(-1)), parameter_error);
}

TEST_CASE("eigenspace dimensions match the harmonic-count difference formula") {
  // Degree-l harmonic polynomials in d+1 variables number
  // binom(l+d, d) - binom(l+d-2, d); a formula disjoint from the product
  // form used by the implementation.
  for (int d : {2, 3, 7, 25}) {
    for (BigInt l = 0; l <= 60; ++l) {
      BigInt expect = binom(l + d, d) - binom(l + d - 2, d);
      CHECK(eigenspace_dim(sphere(d), l) == expect);
    }
  }
  for (int d : {1, 2, 3, 7, 25}) {
    for (BigInt l = 0; l <= 60; ++l)
      CHECK(eigenspace_dim(ball(d), l) == binom(l + d - 1, l));
  }
}

TEST_CASE("cumulative dimensions: pinned values and binomial identity") {
  CHECK(cumulative_dim(sphere(2), -1) == 0);
  CHECK(cumulative_dim(sphere(2), 2) == 9);
  CHECK(cumulative_dim(ball(3), 2) == 10);
  CHECK_THROWS_AS(cumulative_dim(sphere(2), BigInt(-2)), parameter_error);

  for (int d : {2, 3, 10, 50}) {
    for (BigInt m = 0; m <= 100; m += 7) {
      CHECK(cumulative_dim(sphere(d), m) == binom(m + d, d) + binom(m + d - 1, d));
      CHECK(cumulative_dim(ball(d), m) == binom(m + d, d));
    }
  }
}

TEST_CASE("telescoping: cum(m) - cum(m-1) = eigenspace(m)") {
  for (int d : {2, 3, 10, 50}) {
    for (const GeometryDomain& dom : {sphere(d), ball(d)}) {
      BigInt prev = 0;
      for (BigInt m = 0; m <= 100; ++m) {
        BigInt cur = cumulative_dim(dom, m);
        CHECK(cur - prev == eigenspace_dim(dom, m));
        CHECK(cur > prev);  // strictly increasing
        prev = cur;
      }
    }
  }
}

TEST_CASE("degree_for_index: pinned values") {
  CHECK(degree_for_index(sphere(2), 1) == 0);
  CHECK(degree_for_index(sphere(2), 9) == 2);
  CHECK(degree_for_index(ball(3), 11) == 3);
  CHECK_THROWS_AS(degree_for_index(sphere(2), 0), parameter_error);
}

TEST_CASE("degree_for_index inverts cumulative_dim at both block edges") {
  for (int d : {2, 3, 11, 40}) {
    for (const GeometryDomain& dom : {sphere(d), ball(d)}) {
      for (BigInt k = 0; k <= 200; k += (k < 20 ? BigInt(1) : BigInt(13))) {
        BigInt cum = cumulative_dim(dom, k);
        CHECK(degree_for_index(dom, cum) == k);
        CHECK(degree_for_index(dom, cum + 1) == k + 1);
        if (k > 0) CHECK(degree_for_index(dom, cumulative_dim(dom, k - 1) + 1) == k);
      }
    }
  }
}

TEST_CASE("degree_for_index handles astronomically large indices") {
  // d=2 closed form: C(2,m) = (m+1)^2.
  BigInt m = BigInt("1000000000000000000000000");
  BigInt n = (m + 1) * (m + 1);
  CHECK(degree_for_index(sphere(2), n) == m);
  CHECK(degree_for_index(sphere(2), n + 1) == m + 1);
  CHECK(degree_for_index(sphere(2), n - 1) == m);

  GeometryDomain dom = ball(17);
  BigInt cum = cumulative_dim(dom, BigInt("123456789123456789"));
  CHECK(degree_for_index(dom, cum) == BigInt("123456789123456789"));
}

TEST_CASE("dimension brackets hold across the grid") {
  // lower = max{(1+m/d)^d, (1+d/m)^m}  <=  cum  <=
  // upper = min{e^d (1+m/d)^d, e^m (1+d/m)^m}
  for (int d = 1; d <= 200; d += (d < 12 ? 1 : 17)) {
    for (BigInt m = 1; m <= 200; m += (m < 12 ? BigInt(1) : BigInt(17))) {
      for (const GeometryDomain& dom :
           d >= 2 ? std::vector<GeometryDomain>{sphere(d), ball(d)}
                  : std::vector<GeometryDomain>{ball(d)}) {
        auto [lo, hi] = dim_bounds(dom, m);
        LogValue cum = LogValue::from_log(log_big(cumulative_dim(dom, m)));
        CHECK(lo <= cum);
        CHECK(cum <= hi);
      }
    }
  }

  auto [lo2, hi2] = dim_bounds(sphere(2), 2);
  CHECK(std::abs((lo2.log() - log(Real(4))).convert_to<double>()) < 1e-40);
  auto [lob, hib] = dim_bounds(ball(1), 1);
  CHECK(std::abs((lob.log() - log(Real(2))).convert_to<double>()) < 1e-40);
  CHECK(cumulative_dim(ball(1), 1) == 2);  // equality case of the bracket
  (void)hi2;
  (void)hib;
}

TEST_CASE("sphere sandwich at m = d: 2^d <= C(d,d) <= (2e)^d") {
  for (int d = 2; d <= 30; ++d) {
    BigInt c = cumulative_dim(sphere(d), d);
    CHECK(c >= BigInt(1) << d);
    // (2e)^d in log domain, compared exactly against ln C(d,d)
    CHECK(log_big(c) <= d * (log(Real(2)) + 1));
  }
}
