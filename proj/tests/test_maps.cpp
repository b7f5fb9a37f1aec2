#include <doctest.h>

#include "loopcoprod/expr.hpp"
#include "loopcoprod/maps.hpp"

using namespace loopcoprod;

TEST_CASE("covering pushforward lands in the identity component") {
  auto f = MapData::covering(3, FiniteGroup::cyclic(2));
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.unchecked());
  auto src = f.source();
  LoopClass img = pushforward(f, LoopClass::monomial(src, 0, 2));
  CHECK(to_string(img) == "g0*x^2");
}

TEST_CASE("self map pushforward scales by d^k") {
  auto f = MapData::sphere_self_map(3, 2);
  auto s = f.source();
  CHECK(f.degree() == 2);
  CHECK(to_string(pushforward(f, LoopClass::monomial(s, 0, 3))) == "8*g0*x^3");

  auto neg = MapData::sphere_self_map(3, -1);
  CHECK(to_string(pushforward(neg, LoopClass::monomial(s, 0, 3))) == "-g0*x^3");
  CHECK(to_string(pushforward(neg, LoopClass::monomial(s, 0, 2))) == "g0*x^2");

  auto zero = MapData::sphere_self_map(3, 0);
  CHECK(pushforward(zero, LoopClass::monomial(s, 0, 3)).is_zero());
  CHECK(to_string(pushforward(zero, LoopClass::monomial(s, 0, 0))) == "g0");
  CHECK(zero.preimages().empty());
}

TEST_CASE("fiber formula agrees with the target coproduct for coverings") {
  for (auto G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(5), FiniteGroup::quaternion(8)}) {
    auto f = MapData::covering(3, G);
    for (long long k = 0; k <= 5; ++k) {
      LoopClass a = LoopClass::monomial(f.source(), 0, k);
      CHECK(coproduct_via_f(f, a) == coproduct(pushforward(f, a)));
    }
  }
}

TEST_CASE("fiber formula agrees with the target coproduct for self maps") {
  for (long long d = -3; d <= 3; ++d) {
    auto f = MapData::sphere_self_map(3, d);
    for (long long k = 0; k <= 8; ++k) {
      LoopClass a = LoopClass::monomial(f.source(), 0, k);
      CHECK(coproduct_via_f(f, a) == coproduct(pushforward(f, a)));
    }
  }
}

TEST_CASE("degree-d identity in tensor form") {
  // coproduct(f_* a) = d * (f⊗f)_* coproduct(a) for degree-d self maps.
  for (long long d : {-2LL, 0LL, 1LL, 3LL}) {
    auto f = MapData::sphere_self_map(5, d);
    for (long long k = 0; k <= 6; ++k) {
      LoopClass a = LoopClass::monomial(f.source(), 0, k);
      TensorClass lhs = coproduct(pushforward(f, a));
      TensorClass rhs = scale(pushforward_tensor(f, coproduct(a)), d);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("universal cover assembly equals the direct coproduct") {
  for (auto G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(6),
                 FiniteGroup::quaternion(8)}) {
    for (int n : {3, 5}) {
      auto s = SpaceSpec::sphere_quotient(n, G);
      for (int g = 0; g < G->order(); ++g)
        for (long long k = 0; k <= 5; ++k) {
          LoopClass a = LoopClass::monomial(s, g, k);
          CHECK(coproduct_via_universal_cover(a) == coproduct(a));
        }
    }
  }
  // Linearity carries over.
  auto s = SpaceSpec::sphere_quotient(3, FiniteGroup::cyclic(4));
  LoopClass a = parse_loop_class(s, "2*g1*x^3 - g3*x + 5*g0*x^2");
  CHECK(coproduct_via_universal_cover(a) == coproduct(a));
}

TEST_CASE("custom maps are accepted but flagged") {
  auto src = SpaceSpec::sphere(3);
  auto tgt = SpaceSpec::sphere_quotient(3, FiniteGroup::cyclic(3));
  auto f = MapData::custom(src, tgt, {{1, 0}, {1, 1}, {1, 2}},
                           [tgt](const Monomial& m) { return LoopClass::monomial(tgt, 0, m.k); });
  CHECK(f.unchecked());
  CHECK(f.degree() == 3);
  LoopClass a = LoopClass::monomial(src, 0, 2);
  // This custom map is the cyclic(3) covering in disguise.
  auto cover = MapData::covering(3, FiniteGroup::cyclic(3));
  CHECK(coproduct_via_f(f, a) == coproduct_via_f(cover, a));
}

TEST_CASE("map validation") {
  CHECK_THROWS_AS(MapData::covering(4, FiniteGroup::cyclic(3)), Error);
  CHECK_THROWS_AS(MapData::covering(1, FiniteGroup::cyclic(1)), Error);
  auto f = MapData::covering(3, FiniteGroup::cyclic(2));
  auto wrong = SpaceSpec::sphere_quotient(3, FiniteGroup::cyclic(2));
  CHECK_THROWS_AS(pushforward(f, LoopClass::monomial(wrong, 1, 1)), Error);
}
