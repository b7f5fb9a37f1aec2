#include "loopcoprod/homology.hpp"

#include "loopcoprod/algebra.hpp"

#include <algorithm>

namespace loopcoprod {

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup out;
  out.rank = a.rank + b.rank;
  // Renormalize the merged torsion into one divisibility chain.
  std::vector<Int> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  if (!all.empty()) {
    IntegerMatrix diag(static_cast<int>(all.size()), static_cast<int>(all.size()));
    for (size_t i = 0; i < all.size(); ++i) diag.set(static_cast<int>(i), static_cast<int>(i), all[i]);
    for (Int& d : smith_normal_form(diag))
      if (d > 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_zero()) return "0";
  std::string s;
  if (g.rank == 1)
    s = "Z";
  else if (g.rank > 1)
    s = "Z^" + std::to_string(g.rank);
  for (const Int& t : g.torsion) {
    if (!s.empty()) s += " ⊕ ";
    s += "Z/" + t.str();
  }
  return s;
}

namespace {

std::vector<std::pair<Int, int>> factorize(Int v) {
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= v && p <= 1000000; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);  // prime or out of trial range
  return out;
}

}  // namespace

std::string to_string_primary(const AbelianGroup& g) {
  if (g.is_zero()) return "0";
  std::vector<Int> pieces;
  for (const Int& t : g.torsion)
    for (const auto& [p, e] : factorize(t)) {
      Int q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      pieces.push_back(q);
    }
  std::sort(pieces.begin(), pieces.end());
  std::string s;
  if (g.rank == 1)
    s = "Z";
  else if (g.rank > 1)
    s = "Z^" + std::to_string(g.rank);
  for (const Int& q : pieces) {
    if (!s.empty()) s += " ⊕ ";
    s += "Z/" + q.str();
  }
  return s;
}

GradedAbelianGroup chain_homology(const std::vector<IntegerMatrix>& boundaries, int max_degree) {
  const int nb = static_cast<int>(boundaries.size());
  for (int i = 0; i + 1 < nb; ++i) {
    if (boundaries[i].cols() != boundaries[i + 1].rows())
      fail(Errc::BadInput, "boundary " + std::to_string(i + 2) + " has " +
                               std::to_string(boundaries[i + 1].rows()) +
                               " rows but the previous one has " +
                               std::to_string(boundaries[i].cols()) + " columns");
    IntegerMatrix prod = multiply(boundaries[i], boundaries[i + 1]);
    if (!prod.entries().empty()) {
      auto [rc, v] = *prod.entries().begin();
      fail(Errc::NotAComplex, "boundary " + std::to_string(i + 1) + " after boundary " +
                                  std::to_string(i + 2) + " is non-zero at (" +
                                  std::to_string(rc.first) + "," + std::to_string(rc.second) +
                                  ") = " + v.str());
    }
  }

  std::vector<std::vector<Int>> snf(nb);
  std::vector<int> rank(nb, 0);
  for (int i = 0; i < nb; ++i) {
    snf[i] = smith_normal_form(boundaries[i]);
    rank[i] = rank_from_diagonal(snf[i]);
  }

  GradedAbelianGroup out;
  for (int d = 0; d <= max_degree; ++d) {
    AbelianGroup h;
    long long dim;
    if (d == 0)
      dim = nb > 0 ? boundaries[0].rows() : 0;
    else if (d - 1 < nb)
      dim = boundaries[d - 1].cols();
    else
      dim = 0;
    long long out_rank = d >= 1 && d - 1 < nb ? rank[d - 1] : 0;
    long long in_rank = d < nb ? rank[d] : 0;
    h.rank = dim - out_rank - in_rank;
    if (h.rank < 0) fail(Errc::NotAComplex, "negative free rank in degree " + std::to_string(d));
    if (d < nb)
      for (const Int& f : snf[d])
        if (f > 1) h.torsion.push_back(f);
    out.by_degree.push_back(std::move(h));
  }
  return out;
}

namespace {

// Normalized bar complex: degree-d generators are tuples of d non-identity
// elements, indexed in mixed radix base |G|-1.
IntegerMatrix bar_boundary(const FiniteGroup& G, int d) {
  const long long base = G.order() - 1;
  long long rows = 1, cols = 1;
  for (int i = 0; i < d - 1; ++i) rows *= base;
  for (int i = 0; i < d; ++i) cols *= base;
  IntegerMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  if (base == 0) return m;

  std::vector<int> tup(d);
  for (long long col = 0; col < cols; ++col) {
    long long rem = col;
    for (int i = 0; i < d; ++i) {
      tup[i] = static_cast<int>(rem % base) + 1;
      rem /= base;
    }
    auto face_index = [&](int skip, int merged_at, int merged_val) {
      long long idx = 0, mult = 1;
      for (int i = 0; i < d; ++i) {
        if (i == skip) continue;
        int v = i == merged_at ? merged_val : tup[i];
        idx += mult * (v - 1);
        mult *= base;
      }
      return idx;
    };
    // Leading face drops g1 (coefficients are trivial), trailing face drops gd.
    m.add(static_cast<int>(face_index(0, -1, 0)), static_cast<int>(col), 1);
    int sign = -1;
    for (int i = 0; i + 1 < d; ++i, sign = -sign) {
      int merged = G.mul(tup[i], tup[i + 1]);
      if (merged != 0)
        m.add(static_cast<int>(face_index(i + 1, i, merged)), static_cast<int>(col), sign);
    }
    m.add(static_cast<int>(face_index(d - 1, -1, 0)), static_cast<int>(col), sign);
  }
  return m;
}

}  // namespace

GradedAbelianGroup group_homology(const GroupPtr& G, int max_degree, long long generator_cap) {
  if (!G) fail(Errc::BadInput, "null group");
  if (max_degree < 0) fail(Errc::BadInput, "negative degree");
  Int gens = 1;
  for (int i = 0; i < max_degree + 1; ++i) gens *= G->order() - 1;
  if (gens > generator_cap)
    fail(Errc::TooLarge, "bar resolution needs " + gens.str() + " generators in degree " +
                             std::to_string(max_degree + 1) + ", cap is " +
                             std::to_string(generator_cap));
  std::vector<IntegerMatrix> boundaries;
  for (int d = 1; d <= max_degree + 1; ++d) boundaries.push_back(bar_boundary(*G, d));
  return chain_homology(boundaries, max_degree);
}

GradedAbelianGroup cyclic_periodic_homology(int m, int max_degree) {
  if (m < 1) fail(Errc::BadInput, "cyclic order must be >= 1");
  if (max_degree < 0) fail(Errc::BadInput, "negative degree");
  std::vector<IntegerMatrix> boundaries;
  for (int d = 1; d <= max_degree + 1; ++d) {
    IntegerMatrix b(1, 1);
    if (d % 2 == 0) b.set(0, 0, m);
    boundaries.push_back(std::move(b));
  }
  return chain_homology(boundaries, max_degree);
}

GradedAbelianGroup quotient_space_homology(int n, const GroupPtr& C, long long generator_cap) {
  SpaceSpec::sphere_quotient(n, C);  // shared validation: n >= 2, odd when C is non-trivial
  GradedAbelianGroup middle = C->is_cyclic() ? cyclic_periodic_homology(C->order(), n - 1)
                                             : group_homology(C, n - 1, generator_cap);
  GradedAbelianGroup out;
  out.by_degree.resize(n + 1);
  out.by_degree[0] = {1, {}};
  for (int i = 1; i <= n - 1; ++i) out.by_degree[i] = middle.at(i);
  out.by_degree[n] = {1, {}};
  return out;
}

}  // namespace loopcoprod
