#include "widthslab/widths.hpp"

#include <cassert>
#include <ostream>

#include "widthslab/errors.hpp"
#include "widthslab/format.hpp"

namespace widthslab {

BreakpointTable::BreakpointTable(MultiplierSequence seq) : seq_(std::move(seq)) {
  rows_.push_back({0, 1, lambda(seq_, 0)});  // cum(0) = 1 on both geometries
}

void BreakpointTable::extend_to_degree(const BigInt& degree) {
  const int d = seq_.dom.d;
  while (rows_.back().degree < degree) {
    BigInt k = rows_.back().degree + 1;
    BigInt cum;
    if (seq_.dom.kind == Geometry::Sphere) {
      // C(d,k) = C(d,k-1) (2k+d)(k+d-1) / ((2k+d-2) k), division exact
      cum = rows_.back().cum * ((2 * k + d) * (k + d - 1)) / ((2 * k + d - 2) * k);
    } else {
      cum = rows_.back().cum * (k + d) / k;
    }
    rows_.push_back({k, std::move(cum), lambda(seq_, k)});
  }
}

void BreakpointTable::extend_to_index(const BigInt& n) {
  if (n < 1) throw parameter_error("BreakpointTable: index must be >= 1");
  while (rows_.back().cum < n) extend_to_degree(rows_.back().degree + 1);
}

BigInt BreakpointTable::degree_for(const BigInt& n) {
  extend_to_index(n);
  // first row with cum >= n
  std::size_t lo = 0, hi = rows_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (rows_[mid].cum < n)
      lo = mid + 1;
    else
      hi = mid;
  }
  return rows_[lo].degree;
}

LogValue BreakpointTable::value_for(const BigInt& n) {
  BigInt k = degree_for(n);
  return rows_[k.convert_to<std::size_t>()].value;
}

LogValue approx_number(const MultiplierSequence& seq, const BigInt& n) {
  if (n < 1) throw parameter_error("approx_number: n must be >= 1");
  return lambda(seq, degree_for_index(seq.dom, n));
}

LogValue worst_case_error(const MultiplierSequence& seq, const BigInt& n) {
  if (n < 0) throw parameter_error("worst_case_error: n must be >= 0");
  return approx_number(seq, n + 1);
}

BreakpointTable staircase(const MultiplierSequence& seq, const BigInt& k_max) {
  if (k_max < 0) throw parameter_error("staircase: k_max must be >= 0");
  BreakpointTable table(seq);
  table.extend_to_degree(k_max);
  return table;
}

void write_staircase_csv(std::ostream& out, const BreakpointTable& table, int precision) {
  out << "degree,cum_dim,log_value,value_if_representable\n";
  for (const auto& row : table.rows()) {
    out << row.degree << ',' << row.cum << ',' << format_real(row.value.log(), precision) << ','
        << format_linear(row.value, precision) << '\n';
  }
}

}  // namespace widthslab
