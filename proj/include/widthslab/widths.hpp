#pragma once

#include <iosfwd>
#include <vector>

#include "widthslab/multipliers.hpp"

namespace widthslab {

// One step of the approximation-number staircase: indices n with
// cum(degree-1) < n <= cum(degree) all share the value lambda(degree).
struct BreakpointRow {
  BigInt degree;
  BigInt cum;      // cumulative dimension through this degree
  LogValue value;  // lambda at this degree
};

// The staircase materialized degree by degree with the exact one-step
// cumulative-dimension recurrence. Grows lazily; single writer, so extend
// from one thread and share read-only afterwards.
class BreakpointTable {
public:
  explicit BreakpointTable(MultiplierSequence seq);

  const MultiplierSequence& sequence() const { return seq_; }
  const std::vector<BreakpointRow>& rows() const { return rows_; }

  // Materializes rows through the given degree (no-op if already there).
  void extend_to_degree(const BigInt& degree);
  // Materializes until the cumulative dimension reaches n (n >= 1).
  void extend_to_index(const BigInt& n);

  // Degree of the block containing index n; extends the table as needed.
  BigInt degree_for(const BigInt& n);
  // a_n read off the table.
  LogValue value_for(const BigInt& n);

private:
  MultiplierSequence seq_;
  std::vector<BreakpointRow> rows_;
};

// The n-th approximation number of the embedding, n >= 1: the staircase
// value lambda(k) for the unique k with cum(k-1) < n <= cum(k).
LogValue approx_number(const MultiplierSequence& seq, const BigInt& n);

// Worst-case error after n pieces of information, n >= 0: e(n) = a_{n+1};
// e(0) is the initial error.
LogValue worst_case_error(const MultiplierSequence& seq, const BigInt& n);

// The staircase through degree k_max as a table.
BreakpointTable staircase(const MultiplierSequence& seq, const BigInt& k_max);

// CSV schema: degree,cum_dim,log_value,value_if_representable
// The last field is empty when the value lies below e^{-700}.
void write_staircase_csv(std::ostream& out, const BreakpointTable& table, int precision);

}  // namespace widthslab
