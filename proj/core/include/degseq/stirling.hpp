#pragma once

#include <string>
#include <vector>

#include "degseq/bipoly.hpp"

namespace degseq {

enum class StirlingKind { first, second, first_degenerate, second_degenerate };

// Triangular table of Stirling numbers, classical or degenerate. Entries are
// elements of Q[lambda] (constants for the classical kinds). Built once by
// the defining recurrence and immutable afterwards; entry(n, l) = 0 for
// l > n, entry(0, 0) = 1.
//
// The degenerate recurrences follow from the step recurrences of the two
// factorial bases; the test suite gates them by exact comparison against the
// generating functions (1/k!)(e_lambda(t)-1)^k and (1/k!)(log_lambda(1+t))^k
// before anything else relies on the tables.
class StirlingTable {
 public:
  static StirlingTable first(int nmax);
  static StirlingTable second(int nmax);
  // S_{1,lambda}: (x)_n = sum_l S_{1,lambda}(n,l) (x)_{l,lambda}.
  static StirlingTable first_degenerate(int nmax);
  // S_{2,lambda}: (x)_{n,lambda} = sum_l S_{2,lambda}(n,l) (x)_l.
  static StirlingTable second_degenerate(int nmax);

  StirlingKind kind() const { return kind_; }
  int nmax() const { return nmax_; }
  const BiPoly& at(int n, int l) const;  // 0 <= n <= nmax, any l >= 0

 private:
  StirlingTable(StirlingKind kind, int nmax);

  StirlingKind kind_;
  int nmax_;
  std::vector<std::vector<BiPoly>> entries_;  // entries_[n] has n+1 slots
};

std::string stirling_kind_name(StirlingKind kind);

}  // namespace degseq
