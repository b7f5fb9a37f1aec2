#include "loopcoprod/coproduct.hpp"

namespace loopcoprod {

TensorClass coproduct(const LoopClass& a) {
  const SpaceSpec& s = a.space();
  if (s.infinite()) fail(Errc::BadInput, "use infinite_pi1_rule for declared-infinite groups");
  const auto& G = *s.group;
  TensorClass out(s);
  for (const auto& [m, c] : a.terms()) {
    for (long long i = 0; i + 1 <= m.k; ++i) {
      long long j = m.k - 1 - i;
      for (int h = 0; h < G.order(); ++h)
        out.add_term({mono(G.mul(m.g, G.inverse(h)), i), mono(h, j)}, c);
    }
  }
  return out;
}

TensorClass infinite_pi1_rule(int n) { return TensorClass(SpaceSpec::infinite_pi1(n)); }

const char* variant_name(CircleVariant v) {
  switch (v) {
    case CircleVariant::vee_plus: return "vee+";
    case CircleVariant::vee_minus: return "vee-";
    case CircleVariant::lambda_plus: return "lambda+";
    case CircleVariant::lambda_minus: return "lambda-";
  }
  return "?";
}

std::optional<CircleVariant> variant_from_name(const std::string& s) {
  if (s == "vee+") return CircleVariant::vee_plus;
  if (s == "vee-") return CircleVariant::vee_minus;
  if (s == "lambda+") return CircleVariant::lambda_plus;
  if (s == "lambda-") return CircleVariant::lambda_minus;
  return std::nullopt;
}

LaurentTensor coproduct_circle(CircleVariant v, const LaurentClass& a) {
  LaurentTensor out;
  // Each variant is a sum of x^l ⊗ x^{k-l} over an l-window; for k below the
  // window the orientation flips the sign.
  auto window = [&](long long k, Int c, long long lo, long long hi, Int sgn) {
    for (long long l = lo; l <= hi; ++l) laurent_add_term(out, l, k - l, c * sgn);
  };
  for (const auto& [k, c] : a) {
    switch (v) {
      case CircleVariant::vee_plus:
        if (k > 0)
          window(k, c, 1, k, 1);
        else if (k < 0)
          window(k, c, k + 1, 0, -1);
        break;
      case CircleVariant::vee_minus:
        if (k > 0)
          window(k, c, 0, k - 1, 1);
        else if (k < 0)
          window(k, c, k, -1, -1);
        break;
      case CircleVariant::lambda_plus:
        if (k >= 0)
          window(k, c, 0, k, 1);
        else
          window(k, c, k + 1, -1, -1);
        break;
      case CircleVariant::lambda_minus:
        if (k > 0)
          window(k, c, 1, k - 1, 1);
        else
          window(k, c, k, 0, -1);
        break;
    }
  }
  return out;
}

SullivanReport check_sullivan(const LoopClass& a, const LoopClass& b) {
  a.space().require_same(b.space());
  if (!a.homogeneous() || a.is_zero() || !b.homogeneous() || b.is_zero())
    fail(Errc::NonHomogeneous, "sullivan check needs non-zero homogeneous classes");
  const int n = a.space().n;
  const bool odd = (n - 1) % 2 != 0 && a.degree() % 2 != 0;
  const int sign = odd ? -1 : 1;
  TensorClass lhs = coproduct(multiply(a, b));
  TensorClass r1 = contract_right(coproduct(a), b);
  TensorClass r2 = contract_left(coproduct(b), a);
  TensorClass defect = subtract(subtract(lhs, r1), scale(r2, sign));
  return {defect.is_zero(), sign, std::move(defect)};
}

CircleSullivanReport check_sullivan_circle(CircleVariant v, const LaurentClass& a,
                                           const LaurentClass& b) {
  // n = 1: the Koszul sign is always +1.
  LaurentTensor lhs = coproduct_circle(v, laurent_multiply(a, b));
  LaurentTensor r1 = laurent_contract_right(coproduct_circle(v, a), b);
  LaurentTensor r2 = laurent_contract_left(coproduct_circle(v, b), a);
  LaurentTensor defect = laurent_subtract(laurent_subtract(lhs, r1), r2);
  return {defect.empty(), std::move(defect)};
}

Pi1Report pi1_fixed(const TensorClass& t) {
  if (t.space().infinite()) return {true};
  for (int tau = 0; tau < t.space().group->order(); ++tau)
    if (!(act_tensor(t, tau) == t)) return {false, tau};
  return {true};
}

Pi1Report check_pi1_invariance(const LoopClass& a) { return pi1_fixed(coproduct(a)); }

WitnessResult coproduct_witness(const SpaceSpec& space, int g, long long k) {
  if (space.infinite() || space.group->trivial())
    fail(Errc::TrivialGroup, "witness search needs a non-trivial finite group");
  const auto& G = *space.group;
  G.check_element(g);
  if (k < 1) fail(Errc::ZeroExponent, "witness search needs k >= 1");
  const Monomial unit = mono(0, 0);
  // Scan in the canonical term order of the coproduct.
  TensorClass cp = coproduct(LoopClass::monomial(space, g, k));
  for (const auto& [t, c] : cp.terms()) {
    (void)c;
    if (!(t.first == unit) && !(t.second == unit)) return {WitnessStatus::Found, t};
  }
  if (G.order() == 2 && g == 1 && k == 1) return {WitnessStatus::Exceptional, std::nullopt};
  return {WitnessStatus::NoneFound, std::nullopt};
}

}  // namespace loopcoprod
