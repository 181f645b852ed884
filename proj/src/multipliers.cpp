#include "widthslab/multipliers.hpp"

#include <cassert>
#include <sstream>

#include "detail/keyval.hpp"
#include "widthslab/errors.hpp"

namespace widthslab {

namespace {

// Short decimal spelling for canonical labels (parameters are human inputs;
// 15 significant digits round-trip every value we ever print).
std::string short_real(const Real& x) {
  std::ostringstream os;
  os.precision(15);
  os << x.convert_to<double>();
  return os.str();
}

void validate_spec(const SequenceSpec& s) {
  if (s.family == Family::Gevrey) {
    if (!(s.alpha > 0)) throw parameter_error("gevrey requires alpha > 0");
    if (!(s.beta > 0)) throw parameter_error("gevrey requires beta > 0");
  } else {
    if (!(s.r > 0)) throw parameter_error("sobolev families require r > 0");
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::SobolevStar: return "sobolev-star";
    case Family::SobolevPlus: return "sobolev-plus";
    case Family::SobolevSharp: return "sobolev-sharp";
    case Family::SobolevMinus: return "sobolev-minus";
    case Family::Gevrey: return "gevrey";
  }
  return "?";
}

bool is_sobolev(Family f) { return f != Family::Gevrey; }

SequenceSpec SequenceSpec::sobolev(Family f, const Real& r) {
  if (!is_sobolev(f)) throw parameter_error("sobolev() called with the gevrey family");
  SequenceSpec s;
  s.family = f;
  s.r = r;
  validate_spec(s);
  return s;
}

SequenceSpec SequenceSpec::gevrey(const Real& alpha, const Real& beta) {
  SequenceSpec s;
  s.family = Family::Gevrey;
  s.alpha = alpha;
  s.beta = beta;
  validate_spec(s);
  return s;
}

std::string SequenceSpec::label() const {
  if (family == Family::Gevrey)
    return std::string("gevrey:alpha=") + short_real(alpha) + ",beta=" + short_real(beta);
  return std::string(family_name(family)) + ":r=" + short_real(r);
}

SequenceSpec parse_sequence(const std::string& text) {
  auto parts = detail::split_specifier(text);
  Family fam;
  if (parts.head == "sobolev-star")
    fam = Family::SobolevStar;
  else if (parts.head == "sobolev-plus")
    fam = Family::SobolevPlus;
  else if (parts.head == "sobolev-sharp")
    fam = Family::SobolevSharp;
  else if (parts.head == "sobolev-minus")
    fam = Family::SobolevMinus;
  else if (parts.head == "gevrey")
    fam = Family::Gevrey;
  else
    throw parse_error("unknown multiplier family", parts.head);

  SequenceSpec s;
  s.family = fam;
  bool have_r = false, have_alpha = false, have_beta = false;
  for (const auto& [key, value] : parts.params) {
    const std::string token = key + "=" + value;
    if (key == "r" && is_sobolev(fam)) {
      s.r = detail::parse_real_token(value, token);
      have_r = true;
    } else if (key == "alpha" && fam == Family::Gevrey) {
      s.alpha = detail::parse_real_token(value, token);
      have_alpha = true;
    } else if (key == "beta" && fam == Family::Gevrey) {
      s.beta = detail::parse_real_token(value, token);
      have_beta = true;
    } else {
      throw parse_error("unknown parameter for " + std::string(family_name(fam)), key);
    }
  }
  if (is_sobolev(fam) && !have_r) throw parse_error("missing r=<real>", text);
  if (fam == Family::Gevrey && !(have_alpha && have_beta))
    throw parse_error("gevrey needs alpha=<real>,beta=<real>", text);
  try {
    validate_spec(s);
  } catch (const parameter_error& e) {
    throw parse_error(e.what(), text);
  }
  return s;
}

MultiplierSequence::MultiplierSequence(SequenceSpec spec_, GeometryDomain dom_)
    : spec(std::move(spec_)), dom(dom_) {
  validate_spec(spec);
  if (dom.kind == Geometry::Ball && is_sobolev(spec.family) && spec.family != Family::SobolevStar)
    throw parameter_error(std::string(family_name(spec.family)) +
                          " is defined on the sphere only; the ball spectrum exists "
                          "for sobolev-star and gevrey");
}

LogValue lambda(const MultiplierSequence& seq, const BigInt& k) {
  if (k < 0) throw parameter_error("lambda: degree must be >= 0");
  const int d = seq.dom.d;
  switch (seq.spec.family) {
    case Family::SobolevStar: {
      if (k == 0) return LogValue::one();
      // eigenvalue k(k+d-1) on the sphere, k(k+d) on the ball
      BigInt ev = k * (k + (seq.dom.kind == Geometry::Sphere ? d - 1 : d));
      return LogValue::from_log(-log1p_exp(seq.spec.r * log_big(ev)) / 2);
    }
    case Family::SobolevPlus:
      return LogValue::from_log(-seq.spec.r * log_big(1 + k * (k + d - 1)) / 2);
    case Family::SobolevSharp:
      return LogValue::from_log(-seq.spec.r * log_big(1 + k));
    case Family::SobolevMinus: {
      // k + (d-1)/2 carried as (2k+d-1)/2 to stay exact for even d
      static const Real ln2 = log(Real(2));
      return LogValue::from_log(-seq.spec.r * (log_big(2 * k + d - 1) - ln2));
    }
    case Family::Gevrey: {
      if (k == 0) return LogValue::one();
      return LogValue::from_log(-seq.spec.beta * exp(seq.spec.alpha * log_big(k)));
    }
  }
  throw parameter_error("lambda: unknown family");
}

LogValue initial_error(const MultiplierSequence& seq) { return lambda(seq, 0); }

BigInt find_degree_for_threshold(const MultiplierSequence& seq, const LogValue& eps) {
  if (eps.is_zero()) throw parameter_error("find_degree_for_threshold: eps must be positive");
  if (lambda(seq, 0) <= eps) return 0;

  // Analytic estimate of the crossing degree. From here on eps < lambda(0),
  // and for the families with lambda(0) = 1 that means u = -ln eps > 0.
  const Real u = -eps.log();
  const Real dr(seq.dom.d);
  Real est = 0;
  using boost::multiprecision::log1p;
  switch (seq.spec.family) {
    case Family::SobolevStar: {
      // (m(m+D))^r >= e^{2u} - 1, D = d-1 (sphere) or d (ball)
      const Real D = seq.dom.kind == Geometry::Sphere ? dr - 1 : dr;
      const Real lnQ = (2 * u + log1p(-exp(-2 * u))) / seq.spec.r;
      const Real Q = exp(lnQ);
      est = (-D + sqrt(D * D + 4 * Q)) / 2;
      break;
    }
    case Family::SobolevPlus: {
      // m(m+d-1) >= e^{2u/r} - 1
      const Real D = dr - 1;
      const Real X = exp(2 * u / seq.spec.r) - 1;
      est = X > 0 ? (-D + sqrt(D * D + 4 * X)) / 2 : Real(0);
      break;
    }
    case Family::SobolevSharp:
      est = exp(u / seq.spec.r) - 1;
      break;
    case Family::SobolevMinus:
      est = exp(u / seq.spec.r) - (dr - 1) / 2;
      break;
    case Family::Gevrey:
      est = exp(log(u / seq.spec.beta) / seq.spec.alpha);
      break;
  }

  BigInt m = est > 0 ? floor_big(est) : BigInt(0);
  // The estimate is within one or two of the true crossing; exact comparisons
  // settle it (and keep the tie rule lambda(m) <= eps).
  while (lambda(seq, m) > eps) ++m;
  while (m > 0 && lambda(seq, m - 1) <= eps) --m;
  return m;
}

}  // namespace widthslab
