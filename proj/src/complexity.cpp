#include "widthslab/complexity.hpp"

#include "widthslab/errors.hpp"

namespace widthslab {

const char* criterion_name(ErrorCriterion c) {
  return c == ErrorCriterion::Absolute ? "absolute" : "normalized";
}

BigInt info_complexity(const MultiplierSequence& seq, const LogValue& eps, ErrorCriterion crit) {
  if (eps.is_zero()) throw parameter_error("info_complexity: eps must be positive");
  LogValue threshold = crit == ErrorCriterion::Absolute ? eps : eps * initial_error(seq);
  BigInt m = find_degree_for_threshold(seq, threshold);
  return cumulative_dim(seq.dom, m - 1);
}

std::vector<CurseRow> curse_witness(Geometry kind, const SequenceSpec& spec,
                                    ErrorCriterion crit, const LogValue& eps,
                                    const std::vector<int>& dims) {
  std::vector<CurseRow> rows;
  rows.reserve(dims.size());
  for (int d : dims) {
    MultiplierSequence seq(spec, GeometryDomain(kind, d));
    BigInt n = info_complexity(seq, eps, crit);
    rows.push_back({d, n, n >= (BigInt(1) << d)});
  }
  return rows;
}

}  // namespace widthslab
