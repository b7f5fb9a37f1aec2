#pragma once

#include <optional>

#include "loopcoprod/algebra.hpp"

namespace loopcoprod {

// Loop coproduct on H_*(Omega(S^n/G)), linear over terms:
//   (g x^k) -> sum_{i+j=k-1} sum_{h in G} (g h^-1 x^i) ⊗ (h x^j),
// zero when k = 0. Drops degree by n-1.
TensorClass coproduct(const LoopClass& a);

// A declared-infinite fundamental group forces the zero coproduct for n >= 2.
// n = 1 is the circle and is refused here.
TensorClass infinite_pi1_rule(int n);

// Circle coproducts on Z[x, x^-1]; the four sum conventions differ in
// which boundary terms x^0 ⊗ x^k and x^k ⊗ x^0 they keep.
enum class CircleVariant { vee_plus, vee_minus, lambda_plus, lambda_minus };
const char* variant_name(CircleVariant v);
std::optional<CircleVariant> variant_from_name(const std::string& s);
LaurentTensor coproduct_circle(CircleVariant v, const LaurentClass& a);

// Sullivan relation defect for homogeneous a, b:
//   coproduct(a b) - contract_right(coproduct(a), b)
//                  - (-1)^{(n-1)|a|} contract_left(coproduct(b), a).
struct SullivanReport {
  bool holds;
  int sign;  // the (-1)^{(n-1)|a|} factor used
  TensorClass defect;
};
SullivanReport check_sullivan(const LoopClass& a, const LoopClass& b);

struct CircleSullivanReport {
  bool holds;
  LaurentTensor defect;
};
CircleSullivanReport check_sullivan_circle(CircleVariant v, const LaurentClass& a,
                                           const LaurentClass& b);

// Fixed-point predicate for the deck action on tensors, and its application
// to coproduct outputs (which are always fixed).
struct Pi1Report {
  bool invariant;
  int failing_tau = -1;  // valid when !invariant
};
Pi1Report pi1_fixed(const TensorClass& t);
Pi1Report check_pi1_invariance(const LoopClass& a);

// Looks for a coproduct term of g x^k (k >= 1) with both tensor legs
// different from g0 x^0. Exceptional covers the one shape where no such
// term exists over a non-trivial group: |G| = 2, g the non-identity class,
// k = 1 (the projective-space corner).
enum class WitnessStatus { Found, Exceptional, NoneFound };
struct WitnessResult {
  WitnessStatus status;
  std::optional<TensorTerm> term;  // set when Found
};
WitnessResult coproduct_witness(const SpaceSpec& space, int g, long long k);

}  // namespace loopcoprod
