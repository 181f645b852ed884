#include "widthslab/dims.hpp"

#include <cassert>

#include "detail/keyval.hpp"
#include "widthslab/errors.hpp"

namespace widthslab {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Exact quotient; the callers only divide when divisibility is guaranteed
// by the combinatorial identity being evaluated.
BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  assert(r == 0);
  return q;
}

}  // namespace

GeometryDomain::GeometryDomain(Geometry kind_, int d_) : kind(kind_), d(d_) {
  if (kind == Geometry::Sphere && d < 2)
    throw parameter_error("sphere domain requires d >= 2, got d=" + std::to_string(d));
  if (kind == Geometry::Ball && d < 1)
    throw parameter_error("ball domain requires d >= 1, got d=" + std::to_string(d));
}

std::string GeometryDomain::name() const {
  return (kind == Geometry::Sphere ? "sphere:d=" : "ball:d=") + std::to_string(d);
}

GeometryDomain parse_domain(const std::string& text) {
  auto parts = detail::split_specifier(text);
  Geometry kind;
  if (parts.head == "sphere")
    kind = Geometry::Sphere;
  else if (parts.head == "ball")
    kind = Geometry::Ball;
  else
    throw parse_error("unknown domain (expected sphere or ball)", parts.head);
  int d = 0;
  bool have_d = false;
  for (const auto& [key, value] : parts.params) {
    if (key == "d") {
      d = detail::parse_int_token(value, key + "=" + value);
      have_d = true;
    } else {
      throw parse_error("unknown domain parameter", key);
    }
  }
  if (!have_d) throw parse_error("domain needs d=<int>", text);
  try {
    return GeometryDomain(kind, d);
  } catch (const parameter_error& e) {
    throw parse_error(e.what(), text);
  }
}

BigInt eigenspace_dim(const GeometryDomain& dom, const BigInt& l) {
  if (l < 0) throw parameter_error("eigenspace_dim: degree must be >= 0");
  const int d = dom.d;
  if (dom.kind == Geometry::Sphere) {
    if (l == 0) return 1;
    // (2l+d-1) * (l+1)(l+2)...(l+d-2) / (d-1)!
    BigInt num = 2 * l + (d - 1);
    for (int j = 1; j <= d - 2; ++j) num *= l + j;
    return exact_div(num, factorial(d - 1));
  }
  // binom(l+d-1, d-1) = (l+1)(l+2)...(l+d-1) / (d-1)!
  BigInt num = 1;
  for (int j = 1; j <= d - 1; ++j) num *= l + j;
  return exact_div(num, factorial(d - 1));
}

BigInt cumulative_dim(const GeometryDomain& dom, const BigInt& m) {
  if (m < -1) throw parameter_error("cumulative_dim: degree must be >= -1");
  if (m == -1) return 0;
  const int d = dom.d;
  if (dom.kind == Geometry::Sphere) {
    // C(d,m) = (2m+d) * (m+1)...(m+d-1) / d!
    BigInt num = 2 * m + d;
    for (int j = 1; j <= d - 1; ++j) num *= m + j;
    return exact_div(num, factorial(d));
  }
  // D(m,d) = binom(m+d, d) = (m+1)...(m+d) / d!
  BigInt num = 1;
  for (int j = 1; j <= d; ++j) num *= m + j;
  return exact_div(num, factorial(d));
}

BigInt degree_for_index(const GeometryDomain& dom, const BigInt& n) {
  if (n < 1) throw parameter_error("degree_for_index: n must be >= 1");
  if (n <= 1) return 0;  // cum(0) == 1 on both geometries

  // Short incremental walk first: ascending sweeps and small indices stay on
  // the one-step ratio recurrence
  //   sphere  C(d,k)/C(d,k-1) = (2k+d)(k+d-1) / ((2k+d-2) k)
  //   ball    D(k,d)/D(k-1,d) = (k+d) / k
  // which costs O(1) big-int operations per degree.
  const int d = dom.d;
  BigInt k = 0, cum = 1;
  for (int step = 0; step < 48; ++step) {
    k += 1;
    if (dom.kind == Geometry::Sphere) {
      cum = exact_div(cum * ((2 * k + d) * (k + d - 1)), (2 * k + d - 2) * k);
    } else {
      cum = exact_div(cum * (k + d), k);
    }
    if (cum >= n) return k;
  }

  // Very large n: doubling search for an upper degree, then bisection.
  // Invariant: cum(lo) < n <= cum(hi).
  BigInt lo = k, hi = k;
  do {
    lo = hi;
    hi *= 2;
  } while (cumulative_dim(dom, hi) < n);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (cumulative_dim(dom, mid) < n)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

std::pair<LogValue, LogValue> dim_bounds(const GeometryDomain& dom, const BigInt& m) {
  if (m < 1) throw parameter_error("dim_bounds: degree must be >= 1");
  const Real dr(dom.d);
  const Real mr(m);
  using boost::multiprecision::log1p;
  const Real a = dr * log1p(mr / dr);  // ln (1+m/d)^d
  const Real b = mr * log1p(dr / mr);  // ln (1+d/m)^m
  const Real lower = a > b ? a : b;
  const Real ua = dr + a;  // ln e^d (1+m/d)^d
  const Real ub = mr + b;  // ln e^m (1+d/m)^m
  const Real upper = ua < ub ? ua : ub;
  return {LogValue::from_log(lower), LogValue::from_log(upper)};
}

}  // namespace widthslab
