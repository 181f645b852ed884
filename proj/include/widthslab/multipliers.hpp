#pragma once

#include <string>

#include "widthslab/dims.hpp"
#include "widthslab/logvalue.hpp"

namespace widthslab {

// The five diagonal multiplier families. Parameter r > 0 for the Sobolev
// forms; alpha > 0, beta > 0 for the Gevrey form. Per degree k:
//
//   sobolev-star    (1 + (k(k+d-1))^r)^{-1/2}   sphere
//                   (1 + (k(k+d))^r)^{-1/2}     ball
//   sobolev-plus    (1 + k(k+d-1))^{-r/2}       sphere only
//   sobolev-sharp   (1 + k)^{-r}                sphere only
//   sobolev-minus   (k + (d-1)/2)^{-r}          sphere only
//   gevrey          e^{-beta k^alpha}           sphere and ball
//
// The three sphere-only forms have no published ball spectrum, so binding
// them to a ball domain is rejected rather than guessed.
enum class Family { SobolevStar, SobolevPlus, SobolevSharp, SobolevMinus, Gevrey };

const char* family_name(Family f);
bool is_sobolev(Family f);

// A family plus its parameters, not yet bound to a domain. `label` is the
// canonical specifier spelling, e.g. "gevrey:alpha=0.5,beta=1".
struct SequenceSpec {
  Family family;
  Real r{0};      // Sobolev forms
  Real alpha{0};  // Gevrey
  Real beta{0};   // Gevrey

  static SequenceSpec sobolev(Family f, const Real& r);
  static SequenceSpec gevrey(const Real& alpha, const Real& beta);

  std::string label() const;
};

// Specifier grammar: family[:key=value[,key=value]...], e.g.
// "sobolev-star:r=1.5" or "gevrey:alpha=0.8,beta=2".
SequenceSpec parse_sequence(const std::string& text);

// A multiplier sequence bound to its domain; validates compatibility.
struct MultiplierSequence {
  SequenceSpec spec;
  GeometryDomain dom;

  MultiplierSequence(SequenceSpec spec, GeometryDomain dom);
};

// The k-th multiplier value (k >= 0), in the log domain. Nonincreasing in k;
// lambda(seq, 0) is the initial error of the embedding.
LogValue lambda(const MultiplierSequence& seq, const BigInt& k);

// lambda(seq, 0): 1 for star/plus/sharp/gevrey, ((d-1)/2)^{-r} for minus.
LogValue initial_error(const MultiplierSequence& seq);

// Smallest degree m with lambda(seq, m) <= eps (ties included). 0 when
// eps >= lambda(seq, 0). Analytic inversion of the closed forms, corrected
// by exact neighbor comparisons, so the answer is right even when m is far
// beyond machine-integer range.
BigInt find_degree_for_threshold(const MultiplierSequence& seq, const LogValue& eps);

}  // namespace widthslab
