#pragma once

#include <string>
#include <utility>

#include "widthslab/logvalue.hpp"
#include "widthslab/numeric.hpp"

namespace widthslab {

enum class Geometry { Sphere, Ball };

// The d-sphere (d >= 2, as a d-dimensional manifold) or the d-ball (d >= 1).
// Everything downstream is indexed by the polynomial degree staircase of
// this domain, so the domain owns the dimension-counting formulas:
//
//   sphere   Z(d,l) = (2l+d-1) (l+d-2)! / ((d-1)! l!)        eigenspace
//            C(d,m) = (2m+d) (m+d-1)! / (m! d!)              cumulative
//   ball     N(l,d) = binom(l+d-1, l)                        eigenspace
//            D(m,d) = binom(m+d, d)                          cumulative
//
// All counts are exact integers; no float ever approximates one.
struct GeometryDomain {
  Geometry kind;
  int d;

  GeometryDomain(Geometry kind, int d);

  std::string name() const;  // "sphere:d=2" style, the parse grammar spelling
};

GeometryDomain parse_domain(const std::string& text);

// Dimension of the degree-l eigenspace (spherical harmonics of degree l,
// resp. the l-th orthogonal polynomial block on the ball). l >= 0.
BigInt eigenspace_dim(const GeometryDomain& dom, const BigInt& l);

// Total dimension of all eigenspaces of degree <= m. m >= -1, where the
// empty sum cumulative_dim(dom, -1) == 0 anchors the staircase.
BigInt cumulative_dim(const GeometryDomain& dom, const BigInt& m);

// Smallest degree k with n <= cumulative_dim(dom, k), i.e. the staircase
// block containing index n (n >= 1). Exact for arbitrarily large n: an
// incremental walk for small k, then doubling search plus bisection with
// exact integer comparisons throughout.
BigInt degree_for_index(const GeometryDomain& dom, const BigInt& n);

// Two-sided bracket for the cumulative dimension, m >= 1:
//   max{(1+m/d)^d, (1+d/m)^m} <= cum(m) <= min{e^d (1+m/d)^d, e^m (1+d/m)^m}
// returned as (lower, upper) in the log domain.
std::pair<LogValue, LogValue> dim_bounds(const GeometryDomain& dom, const BigInt& m);

}  // namespace widthslab
