#include <doctest.h>

#include <algorithm>
#include <set>

#include "loopcoprod/group.hpp"

using namespace loopcoprod;

namespace {

// Test-local order computation straight off the table.
int brute_order(const std::vector<std::vector<int>>& t, int g) {
  int n = 1, cur = g;
  while (cur != 0) {
    cur = t[cur][g];
    ++n;
  }
  return n;
}

// Test-local group axiom scan.
void assert_group_axioms(const std::vector<std::vector<int>>& t) {
  const int o = static_cast<int>(t.size());
  for (int a = 0; a < o; ++a) {
    CHECK(t[0][a] == a);
    CHECK(t[a][0] == a);
  }
  for (int a = 0; a < o; ++a)
    for (int b = 0; b < o; ++b)
      for (int c = 0; c < o; ++c) CHECK(t[t[a][b]][c] == t[a][t[b][c]]);
  for (int a = 0; a < o; ++a) {
    bool has = false;
    for (int b = 0; b < o; ++b) has = has || (t[a][b] == 0 && t[b][a] == 0);
    CHECK(has);
  }
}

}  // namespace

TEST_CASE("cyclic groups") {
  auto g6 = FiniteGroup::cyclic(6);
  CHECK(g6->order() == 6);
  CHECK(g6->name() == "cyclic:6");
  assert_group_axioms(g6->table());

  std::multiset<int> orders;
  for (int a = 0; a < 6; ++a) orders.insert(brute_order(g6->table(), a));
  CHECK(orders == std::multiset<int>{1, 2, 3, 3, 6, 6});
  for (int a = 0; a < 6; ++a) CHECK(g6->element_order(a) == brute_order(g6->table(), a));

  CHECK(g6->is_cyclic());
  CHECK(g6->conjugacy_classes().size() == 6);
  for (int a = 0; a < 6; ++a) CHECK(g6->centralizer(a).group->order() == 6);

  auto triv = FiniteGroup::cyclic(1);
  CHECK(triv->trivial());
  CHECK(triv->name() == "trivial");
  CHECK(triv->is_cyclic());
}

TEST_CASE("quaternion group of order 8") {
  auto q8 = FiniteGroup::quaternion(8);
  CHECK(q8->order() == 8);
  assert_group_axioms(q8->table());
  CHECK_FALSE(q8->is_cyclic());

  int order_two = 0;
  for (int a = 0; a < 8; ++a)
    if (brute_order(q8->table(), a) == 2) ++order_two;
  CHECK(order_two == 1);

  // Brute-force conjugacy partition off the table.
  const auto& t = q8->table();
  std::vector<int> inv(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (t[a][b] == 0) inv[a] = b;
  std::vector<std::set<int>> brute;
  std::vector<bool> seen(8, false);
  for (int g = 0; g < 8; ++g) {
    if (seen[g]) continue;
    std::set<int> cls;
    for (int h = 0; h < 8; ++h) cls.insert(t[t[h][g]][inv[h]]);
    for (int m : cls) seen[m] = true;
    brute.push_back(cls);
  }
  std::multiset<size_t> sizes;
  for (const auto& c : brute) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2, 2});

  auto classes = q8->conjugacy_classes();
  REQUIRE(classes.size() == brute.size());
  for (size_t i = 0; i < classes.size(); ++i)
    CHECK(std::set<int>(classes[i].begin(), classes[i].end()) == brute[i]);

  for (int g = 0; g < 8; ++g) {
    int commuting = 0;
    for (int h = 0; h < 8; ++h)
      if (t[h][g] == t[g][h]) ++commuting;
    auto sub = q8->centralizer(g);
    CHECK(sub.group->order() == commuting);
    assert_group_axioms(sub.group->table());
    // Embedding respects products.
    for (int a = 0; a < sub.group->order(); ++a)
      for (int b = 0; b < sub.group->order(); ++b)
        CHECK(sub.embedding[sub.group->mul(a, b)] == t[sub.embedding[a]][sub.embedding[b]]);
  }
  // Non-central elements of Q8 have centralizer of order 4.
  CHECK(q8->centralizer(1).group->order() == 4);
  CHECK(q8->centralizer(0).group->order() == 8);
}

TEST_CASE("generalized quaternion sizes") {
  for (int order : {8, 12, 16, 20}) {
    auto q = FiniteGroup::quaternion(order);
    assert_group_axioms(q->table());
    int order_two = 0;
    for (int a = 0; a < order; ++a)
      if (brute_order(q->table(), a) == 2) ++order_two;
    CHECK(order_two == 1);
  }
  CHECK_THROWS_AS(FiniteGroup::quaternion(4), Error);
  CHECK_THROWS_AS(FiniteGroup::quaternion(6), Error);
  CHECK_THROWS_AS(FiniteGroup::quaternion(10), Error);
}

TEST_CASE("table loading renumbers the identity to index 0") {
  // Z/3 written with identity at index 2.
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = FiniteGroup::from_table("shifted", t);
  CHECK(g->order() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(g->mul(0, a) == a);
    CHECK(g->mul(a, 0) == a);
  }
  std::multiset<int> orders;
  for (int a = 0; a < 3; ++a) orders.insert(g->element_order(a));
  CHECK(orders == std::multiset<int>{1, 3, 3});
}

TEST_CASE("table validation names the first violation") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::BadInput;
  };

  CHECK(code([] { FiniteGroup::from_table("bad", {{0, 1}}); }) == Errc::MalformedTable);
  CHECK(code([] { FiniteGroup::from_table("bad", {{0, 2}, {1, 0}}); }) == Errc::MalformedTable);
  CHECK(code([] { FiniteGroup::from_table("bad", {}); }) == Errc::MalformedTable);
  CHECK(code([] { FiniteGroup::from_table("bad", {{0, 1}, {0, 1}}); }) == Errc::NoIdentity);
  // Identity and closure but associativity fails.
  CHECK(code([] {
          FiniteGroup::from_table("bad", {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}});
        }) == Errc::NonAssociative);
  // The OR monoid: associative with identity, g1 not invertible.
  CHECK(code([] { FiniteGroup::from_table("bad", {{0, 1}, {1, 1}}); }) == Errc::MissingInverse);

  try {
    FiniteGroup::from_table("bad", {{0, 1}, {1, 1}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("g1") != std::string::npos);
  }
}

TEST_CASE("oversized tables are rejected") {
  std::vector<std::vector<int>> t(129, std::vector<int>(129, 0));
  CHECK_THROWS_AS(FiniteGroup::from_table("big", t), Error);
}

TEST_CASE("unknown elements are rejected") {
  auto g = FiniteGroup::cyclic(4);
  CHECK_THROWS_AS(g->centralizer(4), Error);
  CHECK_THROWS_AS(g->element_order(-1), Error);
}
