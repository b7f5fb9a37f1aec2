#include <doctest.h>

#include "loopcoprod/coproduct.hpp"
#include "loopcoprod/expr.hpp"

using namespace loopcoprod;

TEST_CASE("sphere coproduct matches the telescoping sum") {
  for (int n : {2, 3, 5, 7}) {
    auto s = SpaceSpec::sphere(n);
    for (long long k = 0; k <= 12; ++k) {
      TensorClass got = coproduct(LoopClass::monomial(s, 0, k));
      TensorClass expect(s);
      for (long long i = 1; i <= k; ++i) expect.add_term({mono(0, i - 1), mono(0, k - i)}, 1);
      CHECK(got == expect);
      CHECK(got.terms().size() == static_cast<size_t>(k));
    }
  }
}

TEST_CASE("coproduct over Z/2 in low exponents") {
  auto s = SpaceSpec::sphere_quotient(3, FiniteGroup::cyclic(2));

  TensorClass gbar_x = coproduct(parse_loop_class(s, "g1*x"));
  CHECK(to_string(gbar_x) == "g0 ⊗ g1 + g1 ⊗ g0");

  TensorClass x = coproduct(parse_loop_class(s, "x"));
  CHECK(to_string(x) == "g0 ⊗ g0 + g1 ⊗ g1");

  CHECK(coproduct(parse_loop_class(s, "g1")).is_zero());
  CHECK(coproduct(parse_loop_class(s, "g0")).is_zero());
}

TEST_CASE("coproduct term shape") {
  for (auto G : {FiniteGroup::cyclic(5), FiniteGroup::quaternion(8)}) {
    auto s = SpaceSpec::sphere_quotient(3, G);
    for (int g = 0; g < G->order(); ++g)
      for (long long k = 1; k <= 4; ++k) {
        TensorClass t = coproduct(LoopClass::monomial(s, g, k));
        // Exactly k*|G| terms, coefficient +1, total exponent k-1.
        CHECK(t.terms().size() == static_cast<size_t>(k * G->order()));
        for (const auto& [tt, c] : t.terms()) {
          CHECK(c == 1);
          CHECK(tt.first.k + tt.second.k == k - 1);
        }
      }
  }
}

TEST_CASE("coproduct is linear") {
  auto s = SpaceSpec::sphere_quotient(5, FiniteGroup::cyclic(3));
  LoopClass a = parse_loop_class(s, "2*g1*x^3 - g2*x");
  LoopClass b = parse_loop_class(s, "g0*x^2 + 5*g1*x");
  TensorClass lhs = coproduct(add(a, b));
  TensorClass rhs = add(coproduct(a), coproduct(b));
  CHECK(lhs == rhs);
  CHECK(coproduct(scale(a, 7)) == scale(coproduct(a), 7));
}

TEST_CASE("infinite fundamental group forces zero") {
  CHECK(infinite_pi1_rule(2).is_zero());
  CHECK(infinite_pi1_rule(9).is_zero());
  CHECK_THROWS_AS(infinite_pi1_rule(1), Error);
}

namespace {

// Literal piecewise windows, written out branch by branch.
LaurentTensor circle_reference(CircleVariant v, long long k) {
  LaurentTensor out;
  switch (v) {
    case CircleVariant::vee_plus:
      if (k > 0)
        for (long long l = 1; l <= k; ++l) laurent_add_term(out, l, k - l, 1);
      if (k < 0)
        for (long long l = k + 1; l <= 0; ++l) laurent_add_term(out, l, k - l, -1);
      break;
    case CircleVariant::vee_minus:
      if (k > 0)
        for (long long l = 0; l <= k - 1; ++l) laurent_add_term(out, l, k - l, 1);
      if (k < 0)
        for (long long l = k; l <= -1; ++l) laurent_add_term(out, l, k - l, -1);
      break;
    case CircleVariant::lambda_plus:
      if (k >= 0)
        for (long long l = 0; l <= k; ++l) laurent_add_term(out, l, k - l, 1);
      else
        for (long long l = k + 1; l <= -1; ++l) laurent_add_term(out, l, k - l, -1);
      break;
    case CircleVariant::lambda_minus:
      if (k > 0)
        for (long long l = 1; l <= k - 1; ++l) laurent_add_term(out, l, k - l, 1);
      else
        for (long long l = k; l <= 0; ++l) laurent_add_term(out, l, k - l, -1);
      break;
  }
  return out;
}

LaurentClass xk(long long k) {
  LaurentClass c;
  laurent_add_term(c, k, 1);
  return c;
}

}  // namespace

TEST_CASE("circle variants match their windows") {
  for (auto v : {CircleVariant::vee_plus, CircleVariant::vee_minus, CircleVariant::lambda_plus,
                 CircleVariant::lambda_minus})
    for (long long k = -10; k <= 10; ++k) CHECK(coproduct_circle(v, xk(k)) == circle_reference(v, k));
}

TEST_CASE("circle variant samples") {
  CHECK(to_string(coproduct_circle(CircleVariant::vee_plus, xk(2))) ==
        "x^1 ⊗ x^1 + x^2 ⊗ x^0");
  CHECK(coproduct_circle(CircleVariant::vee_plus, xk(0)).empty());
  CHECK(to_string(coproduct_circle(CircleVariant::vee_plus, xk(-1))) == "-x^0 ⊗ x^-1");
  CHECK(to_string(coproduct_circle(CircleVariant::vee_minus, xk(-1))) == "-x^-1 ⊗ x^0");
  CHECK(to_string(coproduct_circle(CircleVariant::lambda_plus, xk(0))) == "x^0 ⊗ x^0");
  CHECK(coproduct_circle(CircleVariant::lambda_plus, xk(-1)).empty());
  CHECK(to_string(coproduct_circle(CircleVariant::lambda_minus, xk(0))) == "-x^0 ⊗ x^0");
  CHECK(coproduct_circle(CircleVariant::lambda_minus, xk(1)).empty());
}

TEST_CASE("lambda variants differ from vee by the x^0 ideal") {
  for (long long k = -10; k <= 10; ++k) {
    LaurentTensor corner;
    laurent_add_term(corner, 0, k, 1);
    CHECK(laurent_subtract(coproduct_circle(CircleVariant::lambda_plus, xk(k)),
                           coproduct_circle(CircleVariant::vee_plus, xk(k))) == corner);
    LaurentTensor neg_corner;
    laurent_add_term(neg_corner, 0, k, -1);
    CHECK(laurent_subtract(coproduct_circle(CircleVariant::lambda_minus, xk(k)),
                           coproduct_circle(CircleVariant::vee_minus, xk(k))) == neg_corner);
  }
}

TEST_CASE("sullivan relation on spheres") {
  auto s3 = SpaceSpec::sphere(3);
  auto rep = check_sullivan(LoopClass::monomial(s3, 0, 1), LoopClass::monomial(s3, 0, 1));
  CHECK(rep.holds);
  CHECK(rep.sign == 1);

  // Even n, odd-degree a: the relation genuinely fails.
  auto s4 = SpaceSpec::sphere(4);
  auto bad = check_sullivan(LoopClass::monomial(s4, 0, 1), LoopClass::monomial(s4, 0, 1));
  CHECK_FALSE(bad.holds);
  CHECK(bad.sign == -1);
  TensorClass expect(s4);
  expect.add_term({mono(0, 1), mono(0, 0)}, 2);
  CHECK(bad.defect == expect);
}

TEST_CASE("sullivan relation over quaternion(8)") {
  auto s = SpaceSpec::sphere_quotient(3, FiniteGroup::quaternion(8));
  for (int ga = 0; ga < 8; ++ga)
    for (int gb : {0, 1, 5})
      for (long long ka = 1; ka <= 3; ++ka)
        for (long long kb = 0; kb <= 3; ++kb) {
          auto rep = check_sullivan(LoopClass::monomial(s, ga, ka),
                                    LoopClass::monomial(s, gb, kb));
          CHECK(rep.holds);
          CHECK(rep.sign == 1);
        }
}

TEST_CASE("sullivan rejects non-homogeneous input") {
  auto s = SpaceSpec::sphere(3);
  LoopClass mixed = parse_loop_class(s, "x + x^2");
  CHECK_THROWS_AS(check_sullivan(mixed, LoopClass::monomial(s, 0, 1)), Error);
  CHECK_THROWS_AS(check_sullivan(LoopClass(s), LoopClass::monomial(s, 0, 1)), Error);
}

TEST_CASE("circle sullivan holds for vee and fails for lambda") {
  for (long long ka = -4; ka <= 4; ++ka)
    for (long long kb = -4; kb <= 4; ++kb) {
      CHECK(check_sullivan_circle(CircleVariant::vee_plus, xk(ka), xk(kb)).holds);
      CHECK(check_sullivan_circle(CircleVariant::vee_minus, xk(ka), xk(kb)).holds);
    }
  auto lp = check_sullivan_circle(CircleVariant::lambda_plus, xk(1), xk(1));
  CHECK_FALSE(lp.holds);
  LaurentTensor expect;
  laurent_add_term(expect, 1, 1, -1);
  CHECK(lp.defect == expect);
  CHECK_FALSE(check_sullivan_circle(CircleVariant::lambda_minus, xk(1), xk(1)).holds);
}

TEST_CASE("pi1 invariance of the coproduct") {
  auto s = SpaceSpec::sphere_quotient(3, FiniteGroup::cyclic(2));
  CHECK(check_pi1_invariance(parse_loop_class(s, "g1*x")).invariant);

  TensorClass raw(s);
  raw.add_term({mono(1, 0), mono(0, 0)}, 1);  // gbar ⊗ 1 is not fixed
  auto rep = pi1_fixed(raw);
  CHECK_FALSE(rep.invariant);
  CHECK(rep.failing_tau == 1);
}

TEST_CASE("witness classification") {
  auto z2 = SpaceSpec::sphere_quotient(3, FiniteGroup::cyclic(2));
  auto w = coproduct_witness(z2, 1, 1);
  CHECK(w.status == WitnessStatus::Exceptional);
  CHECK_FALSE(w.term.has_value());

  w = coproduct_witness(z2, 0, 1);
  REQUIRE(w.status == WitnessStatus::Found);
  CHECK(*w.term == TensorTerm{mono(1, 0), mono(1, 0)});

  w = coproduct_witness(z2, 1, 2);
  REQUIRE(w.status == WitnessStatus::Found);
  CHECK(*w.term == TensorTerm{mono(1, 0), mono(0, 1)});

  auto z3 = SpaceSpec::sphere_quotient(3, FiniteGroup::cyclic(3));
  w = coproduct_witness(z3, 1, 1);
  REQUIRE(w.status == WitnessStatus::Found);
  CHECK(*w.term == TensorTerm{mono(2, 0), mono(2, 0)});

  CHECK_THROWS_AS(coproduct_witness(SpaceSpec::sphere(3), 0, 1), Error);
  CHECK_THROWS_AS(coproduct_witness(z2, 1, 0), Error);
}
