#include "loopcoprod/maps.hpp"

namespace loopcoprod {

MapData MapData::covering(int n, GroupPtr target_group) {
  SpaceSpec target = SpaceSpec::sphere_quotient(n, std::move(target_group));
  SpaceSpec source = SpaceSpec::sphere(n);
  std::vector<std::pair<int, int>> pre;
  for (int h = 0; h < target.group->order(); ++h) pre.emplace_back(1, h);
  auto push = [target](const Monomial& m) { return LoopClass::monomial(target, 0, m.k); };
  long long deg = target.group->order();
  return MapData(Kind::covering, std::move(source), std::move(target), std::move(pre),
                 std::move(push), false, deg);
}

MapData MapData::sphere_self_map(int n, long long degree) {
  SpaceSpec s = SpaceSpec::sphere(n);
  std::vector<std::pair<int, int>> pre;
  const int sgn = degree >= 0 ? 1 : -1;
  for (long long i = 0; i < (degree >= 0 ? degree : -degree); ++i) pre.emplace_back(sgn, 0);
  auto push = [s, degree](const Monomial& m) {
    Int c = 1;
    for (long long i = 0; i < m.k; ++i) c *= degree;
    return LoopClass::monomial(s, 0, m.k, c);
  };
  return MapData(Kind::sphere_self_map, s, s, std::move(pre), std::move(push), false, degree);
}

MapData MapData::custom(SpaceSpec source, SpaceSpec target,
                        std::vector<std::pair<int, int>> preimages,
                        std::function<LoopClass(const Monomial&)> push_monomial) {
  if (source.infinite() || target.infinite())
    fail(Errc::BadInput, "map data needs finite fundamental groups");
  long long deg = 0;
  for (const auto& [ld, tau] : preimages) {
    target.group->check_element(tau);
    deg += ld;
  }
  return MapData(Kind::custom, std::move(source), std::move(target), std::move(preimages),
                 std::move(push_monomial), true, deg);
}

const char* MapData::kind_name() const {
  switch (kind_) {
    case Kind::covering: return "covering";
    case Kind::sphere_self_map: return "sphere_self_map";
    case Kind::custom: return "custom";
  }
  return "?";
}

long long MapData::degree() const { return self_degree_; }

LoopClass MapData::push_monomial(const Monomial& m) const { return push_(m); }

LoopClass pushforward(const MapData& f, const LoopClass& a) {
  a.space().require_same(f.source());
  LoopClass out(f.target());
  for (const auto& [m, c] : a.terms()) {
    LoopClass img = f.push_monomial(m);
    img.space().require_same(f.target());
    for (const auto& [mi, ci] : img.terms()) out.add_term(mi, c * ci);
  }
  return out;
}

TensorClass pushforward_tensor(const MapData& f, const TensorClass& t) {
  t.space().require_same(f.source());
  TensorClass out(f.target());
  for (const auto& [tt, c] : t.terms()) {
    LoopClass l = f.push_monomial(tt.first);
    LoopClass r = f.push_monomial(tt.second);
    for (const auto& [ml, cl] : l.terms())
      for (const auto& [mr, cr] : r.terms()) out.add_term({ml, mr}, c * cl * cr);
  }
  return out;
}

TensorClass coproduct_via_f(const MapData& f, const LoopClass& a) {
  if (f.target().n < 2) fail(Errc::UnsupportedDimension, "target dimension must be > 1");
  TensorClass pushed = pushforward_tensor(f, coproduct(a));
  TensorClass out(f.target());
  for (const auto& [ld, tau] : f.preimages()) {
    TensorClass moved = act_tensor(pushed, tau);
    for (const auto& [tt, c] : moved.terms()) out.add_term(tt, c * ld);
  }
  return out;
}

TensorClass coproduct_via_universal_cover(const LoopClass& a) {
  const SpaceSpec& s = a.space();
  if (s.infinite()) fail(Errc::BadInput, "needs a finite fundamental group");
  const auto& G = *s.group;
  TensorClass out(s);
  // Monomial g x^k lifts to u^k; sphere terms u^{i-1} ⊗ u^{k-i} come back as
  // (g p(gamma) h) ⊗ (h^-1 p(delta)) summed over the deck group.
  for (const auto& [m, c] : a.terms())
    for (long long i = 1; i <= m.k; ++i)
      for (int h = 0; h < G.order(); ++h)
        out.add_term({mono(G.mul(m.g, h), i - 1), mono(G.inverse(h), m.k - i)}, c);
  return out;
}

}  // namespace loopcoprod
