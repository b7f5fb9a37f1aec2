#include "loopcoprod/group.hpp"

#include <algorithm>

namespace loopcoprod {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::MissingInverse: return "MissingInverse";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::NonHomogeneous: return "NonHomogeneous";
    case Errc::TrivialGroup: return "TrivialGroup";
    case Errc::ZeroExponent: return "ZeroExponent";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

namespace {

// Relabel so that the element at index e becomes index 0 (swap 0 <-> e).
std::vector<std::vector<int>> renumber_identity(const std::vector<std::vector<int>>& t, int e) {
  const int o = static_cast<int>(t.size());
  auto s = [e](int i) { return i == 0 ? e : (i == e ? 0 : i); };
  std::vector<std::vector<int>> out(o, std::vector<int>(o));
  for (int a = 0; a < o; ++a)
    for (int b = 0; b < o; ++b) out[a][b] = s(t[s(a)][s(b)]);
  return out;
}

std::string gsym(int i) { return "g" + std::to_string(i); }

}  // namespace

GroupPtr FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> table) {
  const int o = static_cast<int>(table.size());
  if (o < 1 || o > kMaxOrder)
    fail(Errc::MalformedTable, "order must be between 1 and " + std::to_string(kMaxOrder) +
                                   ", got " + std::to_string(o));
  for (int r = 0; r < o; ++r) {
    if (static_cast<int>(table[r].size()) != o)
      fail(Errc::MalformedTable, "row " + std::to_string(r) + " has " +
                                     std::to_string(table[r].size()) + " entries, expected " +
                                     std::to_string(o));
    for (int c = 0; c < o; ++c)
      if (table[r][c] < 0 || table[r][c] >= o)
        fail(Errc::MalformedTable, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                       ") = " + std::to_string(table[r][c]) + " out of range");
  }

  int e = -1;
  for (int cand = 0; cand < o && e < 0; ++cand) {
    bool ok = true;
    for (int a = 0; a < o && ok; ++a)
      ok = table[cand][a] == a && table[a][cand] == a;
    if (ok) e = cand;
  }
  if (e < 0) fail(Errc::NoIdentity, "no two-sided identity element");
  if (e != 0) table = renumber_identity(table, e);

  for (int a = 0; a < o; ++a)
    for (int b = 0; b < o; ++b)
      for (int c = 0; c < o; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(Errc::NonAssociative, "(" + gsym(a) + "*" + gsym(b) + ")*" + gsym(c) +
                                         " != " + gsym(a) + "*(" + gsym(b) + "*" + gsym(c) + ")");

  std::vector<int> inverse(o, -1);
  for (int a = 0; a < o; ++a) {
    for (int b = 0; b < o; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) fail(Errc::MissingInverse, gsym(a) + " has no two-sided inverse");
  }

  return GroupPtr(new FiniteGroup(std::move(name), std::move(table), std::move(inverse)));
}

GroupPtr FiniteGroup::cyclic(int m) {
  if (m < 1 || m > kMaxOrder)
    fail(Errc::BadInput, "cyclic order must be between 1 and " + std::to_string(kMaxOrder));
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return from_table(m == 1 ? "trivial" : "cyclic:" + std::to_string(m), std::move(t));
}

GroupPtr FiniteGroup::quaternion(int order) {
  if (order < 8 || order % 4 != 0 || order > kMaxOrder)
    fail(Errc::BadInput, "quaternion order must be 4m with m >= 2, got " + std::to_string(order));
  // Elements a^i b^eps, i in [0, 2m), eps in {0,1}, with a^{2m}=1, b^2=a^m,
  // b a b^-1 = a^-1. Index = i + 2m*eps.
  const int two_m = order / 2;
  const int m = order / 4;
  auto idx = [two_m](int i, int eps) { return ((i % two_m) + two_m) % two_m + two_m * eps; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < two_m; ++i)
    for (int eps = 0; eps < 2; ++eps)
      for (int j = 0; j < two_m; ++j)
        for (int delta = 0; delta < 2; ++delta) {
          int lhs = idx(i, eps);
          int rhs = idx(j, delta);
          int out;
          if (eps == 0)
            out = idx(i + j, delta);
          else if (delta == 0)
            out = idx(i - j, 1);
          else
            out = idx(i - j + m, 0);
          t[lhs][rhs] = out;
        }
  return from_table("quaternion:" + std::to_string(order), std::move(t));
}

void FiniteGroup::check_element(int g) const {
  if (g < 0 || g >= order())
    fail(Errc::UnknownElement, gsym(g) + " not in group of order " + std::to_string(order()));
}

int FiniteGroup::element_order(int g) const {
  check_element(g);
  int n = 1;
  int cur = g;
  while (cur != 0) {
    cur = mul(cur, g);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_cyclic() const {
  for (int g = 0; g < order(); ++g)
    if (element_order(g) == order()) return true;
  return false;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  const int o = order();
  std::vector<bool> seen(o, false);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < o; ++g) {
    if (seen[g]) continue;
    std::vector<int> members;
    for (int h = 0; h < o; ++h) {
      int c = conjugate(g, h);
      if (!seen[c]) {
        seen[c] = true;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

FiniteGroup::Subgroup FiniteGroup::centralizer(int g) const {
  check_element(g);
  std::vector<int> emb;
  for (int h = 0; h < order(); ++h)
    if (mul(h, g) == mul(g, h)) emb.push_back(h);
  std::vector<int> pos(order(), -1);
  for (int i = 0; i < static_cast<int>(emb.size()); ++i) pos[emb[i]] = i;
  std::vector<std::vector<int>> t(emb.size(), std::vector<int>(emb.size()));
  for (size_t a = 0; a < emb.size(); ++a)
    for (size_t b = 0; b < emb.size(); ++b) t[a][b] = pos[mul(emb[a], emb[b])];
  return {from_table(name_ + "/C(" + gsym(g) + ")", std::move(t)), std::move(emb)};
}

}  // namespace loopcoprod
