#pragma once

#include <map>
#include <utility>
#include <vector>

#include "loopcoprod/errors.hpp"
#include "loopcoprod/types.hpp"

namespace loopcoprod {

// Exact integer matrix; only non-zero entries are stored.
class IntegerMatrix {
public:
  IntegerMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set(int r, int c, Int v);  // v == 0 erases
  void add(int r, int c, const Int& v);
  Int get(int r, int c) const;
  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

  static IntegerMatrix from_dense(const std::vector<std::vector<long long>>& d);

private:
  int rows_, cols_;
  std::map<std::pair<int, int>, Int> entries_;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

// Smith normal form diagonal of length min(rows, cols): the invariant
// factors d1 | d2 | ... (all > 0) followed by zeros. Unit pivots are
// eliminated sparsely with low-fill pivot selection; what remains is
// finished by a dense minimum-pivot reduction with remainder steps.
std::vector<Int> smith_normal_form(const IntegerMatrix& m);

inline int rank_from_diagonal(const std::vector<Int>& diag) {
  int r = 0;
  for (const Int& d : diag)
    if (d != 0) ++r;
  return r;
}

}  // namespace loopcoprod
