#include <doctest.h>

#include <numeric>
#include <random>

#include "loopcoprod/homology.hpp"
#include "support/bar_oracle.hpp"

using namespace loopcoprod;

namespace {

std::vector<Int> snf_of(const std::vector<std::vector<long long>>& d) {
  return smith_normal_form(IntegerMatrix::from_dense(d));
}

std::vector<Int> diag_ints(std::initializer_list<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

// gcd of all k x k minors, the determinantal-divisor characterization.
Int minor_gcd(const std::vector<std::vector<long long>>& a, int k) {
  const int R = static_cast<int>(a.size());
  const int C = R ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> ri(k), ci(k);
  Int g = 0;

  auto det = [&]() {
    std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = a[ri[i]][ci[j]];
    // Fraction-free Gaussian elimination (Bareiss).
    Int denom = 1, sign = 1;
    for (int p = 0; p < k; ++p) {
      int piv = -1;
      for (int i = p; i < k; ++i)
        if (m[i][p] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      if (piv != p) {
        std::swap(m[piv], m[p]);
        sign = -sign;
      }
      for (int i = p + 1; i < k; ++i)
        for (int j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / denom;
      denom = m[p][p];
    }
    return Int(sign * m[k - 1][k - 1]);
  };

  auto rec = [&](auto&& self, std::vector<int>& idx, int lo, int hi, int pos,
                 auto&& next) -> void {
    if (pos == k) {
      next();
      return;
    }
    for (int v = lo; v <= hi - (k - 1 - pos); ++v) {
      idx[pos] = v;
      self(self, idx, v + 1, hi, pos + 1, next);
    }
  };
  rec(rec, ri, 0, R - 1, 0, [&] {
    rec(rec, ci, 0, C - 1, 0, [&] {
      Int d = det();
      if (d < 0) d = -d;
      g = boost::multiprecision::gcd(g, d);
    });
  });
  return g;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  CHECK(snf_of({{2, 0}, {0, 3}}) == diag_ints({1, 6}));
  CHECK(snf_of({{2, 4}, {6, 8}}) == diag_ints({2, 4}));
  CHECK(snf_of({{0, 0}, {0, 0}, {0, 0}}) == diag_ints({0, 0}));
  CHECK(snf_of({{1, 0}, {0, 1}}) == diag_ints({1, 1}));
  CHECK(snf_of({{2, 0, 0}, {0, 3, 0}}) == diag_ints({1, 6}));
  CHECK(snf_of({{4, 6}, {6, 9}}) == diag_ints({1, 0}));
  CHECK(snf_of({{6}}) == diag_ints({6}));
  CHECK(smith_normal_form(IntegerMatrix(0, 5)).empty());
  CHECK(smith_normal_form(IntegerMatrix(4, 0)).empty());
}

TEST_CASE("smith diagonal matches determinantal divisors") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<long long> entry(-9, 9);
  std::uniform_int_distribution<int> sparsity(0, 3);
  for (int trial = 0; trial < 150; ++trial) {
    int R = dim(rng), C = dim(rng);
    std::vector<std::vector<long long>> a(R, std::vector<long long>(C, 0));
    for (auto& row : a)
      for (auto& v : row) v = sparsity(rng) == 0 ? 0 : entry(rng);
    auto diag = snf_of(a);
    REQUIRE(diag.size() == static_cast<size_t>(std::min(R, C)));
    // Divisibility chain, zeros trailing.
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] != 0) {
        CHECK(diag[i] != 0);
        CHECK(diag[i + 1] % diag[i] == 0);
      }
      CHECK(diag[i] >= 0);
    }
    Int prod = 1;
    for (int k = 1; k <= std::min(R, C); ++k) {
      prod *= diag[k - 1];
      CHECK(prod == minor_gcd(a, k));
    }
  }
}

TEST_CASE("smith normal form is transpose invariant") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<long long> entry(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    int R = dim(rng), C = dim(rng);
    std::vector<std::vector<long long>> a(R, std::vector<long long>(C, 0));
    std::vector<std::vector<long long>> t(C, std::vector<long long>(R, 0));
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < C; ++j) t[j][i] = a[i][j] = entry(rng);
    CHECK(snf_of(a) == snf_of(t));
  }
}

TEST_CASE("cw complex homology") {
  auto groups = [](const GradedAbelianGroup& h) {
    std::vector<std::string> out;
    for (const auto& g : h.by_degree) out.push_back(to_string(g));
    return out;
  };

  // Circle: one vertex, one loop.
  {
    std::vector<IntegerMatrix> b{IntegerMatrix(1, 1)};
    CHECK(groups(chain_homology(b, 1)) == std::vector<std::string>{"Z", "Z"});
  }
  // Torus.
  {
    std::vector<IntegerMatrix> b{IntegerMatrix(1, 2), IntegerMatrix(2, 1)};
    CHECK(groups(chain_homology(b, 2)) == std::vector<std::string>{"Z", "Z^2", "Z"});
  }
  // Klein bottle: attaching word abab^-1.
  {
    IntegerMatrix d2(2, 1);
    d2.set(0, 0, 2);
    std::vector<IntegerMatrix> b{IntegerMatrix(1, 2), d2};
    CHECK(groups(chain_homology(b, 2)) ==
          std::vector<std::string>{"Z", "Z ⊕ Z/2", "0"});
  }
  // Real projective plane.
  {
    IntegerMatrix d2(1, 1);
    d2.set(0, 0, 2);
    std::vector<IntegerMatrix> b{IntegerMatrix(1, 1), d2};
    CHECK(groups(chain_homology(b, 2)) == std::vector<std::string>{"Z", "Z/2", "0"});
  }
  // Boundary of the tetrahedron, honest simplicial matrices.
  {
    IntegerMatrix d1(4, 6);
    // edges 01 02 03 12 13 23
    int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int e = 0; e < 6; ++e) {
      d1.set(ends[e][0], e, -1);
      d1.set(ends[e][1], e, 1);
    }
    IntegerMatrix d2(6, 4);
    // faces 012 013 023 123 with alternating-face boundaries
    int faces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    auto edge_index = [&](int u, int v) {
      for (int e = 0; e < 6; ++e)
        if (ends[e][0] == u && ends[e][1] == v) return e;
      return -1;
    };
    for (int f = 0; f < 4; ++f) {
      const int* t = faces[f];
      d2.add(edge_index(t[1], t[2]), f, 1);
      d2.add(edge_index(t[0], t[2]), f, -1);
      d2.add(edge_index(t[0], t[1]), f, 1);
    }
    std::vector<IntegerMatrix> b{d1, d2};
    CHECK(groups(chain_homology(b, 2)) == std::vector<std::string>{"Z", "0", "Z"});
    CHECK(groups(chain_homology(b, 4)) ==
          std::vector<std::string>{"Z", "0", "Z", "0", "0"});
  }
}

TEST_CASE("non-complexes are named") {
  IntegerMatrix d1(1, 1), d2(1, 1);
  d1.set(0, 0, 2);
  d2.set(0, 0, 3);
  std::vector<IntegerMatrix> b{d1, d2};
  try {
    chain_homology(b, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAComplex);
    CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
  }

  std::vector<IntegerMatrix> shapes{IntegerMatrix(1, 2), IntegerMatrix(3, 1)};
  CHECK_THROWS_AS(chain_homology(shapes, 1), Error);
}

TEST_CASE("group homology of cyclic groups matches the periodic resolution") {
  for (int m = 1; m <= 6; ++m) {
    auto bar = group_homology(FiniteGroup::cyclic(m), 4);
    auto periodic = cyclic_periodic_homology(m, 4);
    CHECK(bar == periodic);
  }
}

TEST_CASE("periodic pattern for Z/12") {
  auto h = cyclic_periodic_homology(12, 5);
  CHECK(to_string(h.at(0)) == "Z");
  CHECK(to_string(h.at(1)) == "Z/12");
  CHECK(to_string(h.at(2)) == "0");
  CHECK(to_string(h.at(3)) == "Z/12");
  CHECK(to_string(h.at(4)) == "0");
  CHECK(to_string(h.at(5)) == "Z/12");
}

TEST_CASE("bar resolution agrees with the dense oracle") {
  for (auto G : {FiniteGroup::cyclic(4), FiniteGroup::cyclic(5), FiniteGroup::quaternion(8)}) {
    const int max_deg = 3;
    auto got = group_homology(G, max_deg);
    auto expect = bar_oracle::homology(G->table(), max_deg);
    for (int d = 0; d <= max_deg; ++d) {
      CHECK(got.at(d).rank == expect.rank[d]);
      REQUIRE(got.at(d).torsion.size() == expect.torsion[d].size());
      for (size_t i = 0; i < expect.torsion[d].size(); ++i)
        CHECK(got.at(d).torsion[i] == expect.torsion[d][i]);
    }
  }
}

TEST_CASE("quaternion(8) homology in low degrees") {
  auto h = group_homology(FiniteGroup::quaternion(8), 3);
  CHECK(to_string(h.at(0)) == "Z");
  CHECK(to_string(h.at(1)) == "Z/2 ⊕ Z/2");
  CHECK(to_string(h.at(2)) == "0");
  CHECK(to_string(h.at(3)) == "Z/8");
}

TEST_CASE("generator cap") {
  CHECK_THROWS_AS(group_homology(FiniteGroup::cyclic(13), 6), Error);
  try {
    group_homology(FiniteGroup::cyclic(13), 6);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
    CHECK(std::string(e.what()).find("35831808") != std::string::npos);
  }
  CHECK_THROWS_AS(group_homology(FiniteGroup::cyclic(3), 2, 3), Error);
  CHECK_NOTHROW(group_homology(FiniteGroup::cyclic(3), 2, 8));
}

TEST_CASE("quotient space homology") {
  auto names = [](const GradedAbelianGroup& h) {
    std::vector<std::string> out;
    for (const auto& g : h.by_degree) out.push_back(to_string(g));
    return out;
  };

  CHECK(names(quotient_space_homology(3, FiniteGroup::cyclic(2))) ==
        std::vector<std::string>{"Z", "Z/2", "0", "Z"});
  CHECK(names(quotient_space_homology(3, FiniteGroup::cyclic(5))) ==
        std::vector<std::string>{"Z", "Z/5", "0", "Z"});
  CHECK(names(quotient_space_homology(3, FiniteGroup::cyclic(1))) ==
        std::vector<std::string>{"Z", "0", "0", "Z"});
  CHECK(names(quotient_space_homology(5, FiniteGroup::cyclic(3))) ==
        std::vector<std::string>{"Z", "Z/3", "0", "Z/3", "0", "Z"});
  CHECK(names(quotient_space_homology(3, FiniteGroup::quaternion(8))) ==
        std::vector<std::string>{"Z", "Z/2 ⊕ Z/2", "0", "Z"});
  CHECK(names(quotient_space_homology(2, FiniteGroup::cyclic(1))) ==
        std::vector<std::string>{"Z", "0", "Z"});
  CHECK_THROWS_AS(quotient_space_homology(4, FiniteGroup::cyclic(2)), Error);
  CHECK_THROWS_AS(quotient_space_homology(1, FiniteGroup::cyclic(1)), Error);
}

TEST_CASE("direct sums renormalize torsion") {
  AbelianGroup z2{0, {2}};
  AbelianGroup z3{0, {3}};
  AbelianGroup z4{0, {4}};
  AbelianGroup z6{0, {6}};
  CHECK(direct_sum(z2, z3) == AbelianGroup{0, {6}});
  CHECK(direct_sum(z2, z4) == AbelianGroup{0, {2, 4}});
  CHECK(direct_sum(z4, z6) == AbelianGroup{0, {2, 12}});
  AbelianGroup a{1, {2}};
  AbelianGroup b{1, {6}};
  CHECK(direct_sum(a, b) == AbelianGroup{2, {2, 6}});
  CHECK(direct_sum(AbelianGroup{}, z2) == z2);
}

TEST_CASE("rendering") {
  CHECK(to_string(AbelianGroup{}) == "0");
  CHECK(to_string(AbelianGroup{1, {}}) == "Z");
  CHECK(to_string(AbelianGroup{2, {2}}) == "Z^2 ⊕ Z/2");
  CHECK(to_string_primary(AbelianGroup{0, {6}}) == "Z/2 ⊕ Z/3");
  CHECK(to_string_primary(AbelianGroup{1, {12}}) == "Z ⊕ Z/3 ⊕ Z/4");
  CHECK(to_string_primary(AbelianGroup{0, {2, 12}}) == "Z/2 ⊕ Z/3 ⊕ Z/4");
  CHECK(to_string_primary(AbelianGroup{0, {2, 4}}) == "Z/2 ⊕ Z/4");
}
