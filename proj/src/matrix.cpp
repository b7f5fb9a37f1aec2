#include "loopcoprod/matrix.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace loopcoprod {

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(Errc::BadInput, "negative matrix dimension");
}

void IntegerMatrix::set(int r, int c, Int v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    fail(Errc::BadInput, "matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                             ") out of range");
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = std::move(v);
}

void IntegerMatrix::add(int r, int c, const Int& v) { set(r, c, get(r, c) + v); }

Int IntegerMatrix::get(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Int(0) : it->second;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long long>>& d) {
  const int r = static_cast<int>(d.size());
  const int c = r == 0 ? 0 : static_cast<int>(d[0].size());
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(d[i].size()) != c) fail(Errc::BadInput, "ragged dense matrix");
    for (int j = 0; j < c; ++j)
      if (d[i][j] != 0) m.set(i, j, d[i][j]);
  }
  return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::BadInput, "matrix shape mismatch in product");
  // Group a by column, then stream b's entries; per-column accumulation
  // keeps the working set small.
  std::vector<std::vector<std::pair<int, const Int*>>> acol(a.cols());
  for (const auto& [rc, v] : a.entries()) acol[rc.second].emplace_back(rc.first, &v);
  std::vector<std::vector<std::pair<int, const Int*>>> bcol(b.cols());
  for (const auto& [rc, v] : b.entries()) bcol[rc.second].emplace_back(rc.first, &v);

  IntegerMatrix out(a.rows(), b.cols());
  std::map<int, Int> local;
  for (int c = 0; c < b.cols(); ++c) {
    local.clear();
    for (const auto& [k, vb] : bcol[c])
      for (const auto& [r, va] : acol[k]) local[r] += (*va) * (*vb);
    for (const auto& [r, v] : local)
      if (v != 0) out.set(r, c, v);
  }
  return out;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Textbook reduction for the dense endgame: minimum-pivot with remainder
// steps, then a divisibility sweep so each pivot divides everything left.
std::vector<Int> dense_snf(std::vector<std::vector<Int>> a) {
  std::vector<Int> out;
  const int R = static_cast<int>(a.size());
  const int C = R == 0 ? 0 : static_cast<int>(a[0].size());
  int top = 0;
  while (top < R && top < C) {
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = top; i < R; ++i)
      for (int j = top; j < C; ++j)
        if (a[i][j] != 0) {
          Int v = abs_int(a[i][j]);
          if (pr < 0 || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
    if (pr < 0) break;
    std::swap(a[top], a[pr]);
    for (int i = 0; i < R; ++i) std::swap(a[i][top], a[i][pc]);

    bool again = false;
    for (int i = top + 1; i < R; ++i) {
      if (a[i][top] == 0) continue;
      Int q = a[i][top] / a[top][top];
      if (q != 0)
        for (int j = top; j < C; ++j) a[i][j] -= q * a[top][j];
      if (a[i][top] != 0) again = true;
    }
    for (int j = top + 1; j < C; ++j) {
      if (a[top][j] == 0) continue;
      Int q = a[top][j] / a[top][top];
      if (q != 0)
        for (int i = top; i < R; ++i) a[i][j] -= q * a[i][top];
      if (a[top][j] != 0) again = true;
    }
    if (again) continue;

    bool fixed = false;
    for (int i = top + 1; i < R && !fixed; ++i)
      for (int j = top + 1; j < C && !fixed; ++j)
        if (a[i][j] % a[top][top] != 0) {
          for (int jj = top; jj < C; ++jj) a[top][jj] += a[i][jj];
          fixed = true;
        }
    if (fixed) continue;

    out.push_back(abs_int(a[top][top]));
    ++top;
  }
  return out;
}

// Signals that the machine-word pass cannot represent a value; the caller
// restarts with arbitrary precision.
struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_neg(long long a) { return checked_sub(0, a); }
Int checked_mul(const Int& a, const Int& b) { return a * b; }
Int checked_sub(const Int& a, const Int& b) { return a - b; }
Int checked_neg(const Int& a) { return -a; }

template <typename T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

long long narrowed(const Int& v, long long) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Overflow{};
  return v.convert_to<long long>();
}
const Int& narrowed(const Int& v, const Int&) { return v; }

// Sparse unit-pivot phase. Rows are sorted (col, value) vectors; column
// occupancy lists may hold stale row ids and are validated on use. T is
// long long on the fast pass and Int after an overflow retry.
template <typename T>
class SmithElim {
public:
  explicit SmithElim(const IntegerMatrix& m)
      : nrows(m.rows()), ncols(m.cols()), rows(nrows), col_rows(ncols), col_nnz(ncols, 0),
        row_alive(nrows, true), col_alive(ncols, true) {
    for (const auto& [rc, v] : m.entries())
      rows[rc.first].emplace_back(rc.second, narrowed(v, T()));
    for (int r = 0; r < nrows; ++r)
      for (const auto& [c, v] : rows[r]) {
        col_rows[c].push_back(r);
        ++col_nnz[c];
      }
    for (int r = 0; r < nrows; ++r)
      for (const auto& [c, v] : rows[r])
        if (is_unit(v)) push_candidate(r, c);
  }

  std::vector<Int> run() {
    int units = 0;
    while (pop_unit_pivot()) ++units;

    // Whatever survives has no +-1 entries; finish densely.
    std::vector<int> live_rows, live_cols;
    std::vector<int> col_pos(ncols, -1);
    for (int c = 0; c < ncols; ++c)
      if (col_alive[c] && col_nnz[c] > 0) {
        col_pos[c] = static_cast<int>(live_cols.size());
        live_cols.push_back(c);
      }
    for (int r = 0; r < nrows; ++r)
      if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
    std::vector<std::vector<Int>> block(live_rows.size(),
                                        std::vector<Int>(live_cols.size(), 0));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) block[i][col_pos[c]] = Int(v);

    std::vector<Int> diag(units, 1);
    for (Int& d : dense_snf(std::move(block))) diag.push_back(std::move(d));
    diag.resize(std::min(nrows, ncols), 0);
    return diag;
  }

private:
  using Row = std::vector<std::pair<int, T>>;

  const T* find(int r, int c) const {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  }

  long long cost_of(int r, int c) const {
    return static_cast<long long>(rows[r].size() - 1) *
           static_cast<long long>(col_nnz[c] - 1);
  }

  void push_candidate(int r, int c) { heap.emplace(cost_of(r, c), r, c); }

  bool pop_unit_pivot() {
    while (!heap.empty()) {
      auto [cost, r, c] = heap.top();
      heap.pop();
      if (!row_alive[r] || !col_alive[c]) continue;
      const T* v = find(r, c);
      if (!v || !is_unit(*v)) continue;
      long long actual = cost_of(r, c);
      if (actual != cost) {
        heap.emplace(actual, r, c);
        continue;
      }
      eliminate(r, c, *v == 1 ? 1 : -1);
      return true;
    }
    return false;
  }

  // Pivot value is +-1: clear the column with exact row operations, then
  // drop the pivot row and column (the implied column operations only
  // touch the pivot row).
  void eliminate(int r, int c, int sign) {
    std::vector<int> targets;
    for (int rr : col_rows[c])
      if (rr != r && row_alive[rr] && find(rr, c)) targets.push_back(rr);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int rr : targets) {
      T q = sign > 0 ? *find(rr, c) : checked_neg(*find(rr, c));
      row_sub(rr, r, q);
    }
    for (const auto& [cc, vv] : rows[r]) --col_nnz[cc];
    rows[r].clear();
    rows[r].shrink_to_fit();
    row_alive[r] = false;
    col_alive[c] = false;
    col_rows[c].clear();
    col_rows[c].shrink_to_fit();
  }

  void row_sub(int tr, int sr, const T& q) {  // rows[tr] -= q * rows[sr]
    const Row& s = rows[sr];
    Row& t = rows[tr];
    Row out;
    out.reserve(t.size() + s.size());
    size_t i = 0, j = 0;
    while (i < t.size() || j < s.size()) {
      if (j == s.size() || (i < t.size() && t[i].first < s[j].first)) {
        out.push_back(std::move(t[i++]));
      } else if (i == t.size() || s[j].first < t[i].first) {
        T v = checked_neg(checked_mul(q, s[j].second));
        int c = s[j].first;
        ++j;
        if (v == 0) continue;
        ++col_nnz[c];
        col_rows[c].push_back(tr);
        if (is_unit(v)) unit_later.emplace_back(tr, c);
        out.emplace_back(c, std::move(v));
      } else {
        T v = checked_sub(t[i].second, checked_mul(q, s[j].second));
        int c = t[i].first;
        ++i;
        ++j;
        if (v == 0) {
          --col_nnz[c];
          continue;
        }
        if (is_unit(v)) unit_later.emplace_back(tr, c);
        out.emplace_back(c, std::move(v));
      }
    }
    t.swap(out);
    for (const auto& [rr, cc] : unit_later) push_candidate(rr, cc);
    unit_later.clear();
  }

  int nrows, ncols;
  std::vector<Row> rows;
  std::vector<std::vector<int>> col_rows;
  std::vector<int> col_nnz;
  std::vector<char> row_alive, col_alive;
  std::priority_queue<std::tuple<long long, int, int>,
                      std::vector<std::tuple<long long, int, int>>,
                      std::greater<std::tuple<long long, int, int>>>
      heap;
  std::vector<std::pair<int, int>> unit_later;
};

}  // namespace

std::vector<Int> smith_normal_form(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  try {
    return SmithElim<long long>(m).run();
  } catch (const Overflow&) {
    return SmithElim<Int>(m).run();
  }
}

}  // namespace loopcoprod
