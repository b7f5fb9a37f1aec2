#pragma once

#include <map>
#include <optional>
#include <utility>

#include "loopcoprod/group.hpp"
#include "loopcoprod/types.hpp"

namespace loopcoprod {

// Base space S^n/G for the based loop space algebra H_*(Omega(S^n/G)).
// A null group pointer declares an infinite fundamental group; only the
// zero-coproduct rule applies to such spaces.
struct SpaceSpec {
  int n = 0;
  GroupPtr group;

  // n >= 2 always; a non-trivial group requires odd n.
  static SpaceSpec sphere_quotient(int n, GroupPtr g);
  static SpaceSpec sphere(int n);  // trivial fundamental group
  static SpaceSpec infinite_pi1(int n);

  bool infinite() const { return group == nullptr; }
  bool same_space(const SpaceSpec& o) const;
  void require_same(const SpaceSpec& o) const;  // SpaceMismatch otherwise
};

// g * x^k with g a group element index and x the degree-(n-1) generator.
// Field order matters: term ordering is lexicographic in (k, g).
struct Monomial {
  long long k = 0;
  int g = 0;
  auto operator<=>(const Monomial&) const = default;
};

inline Monomial mono(int g, long long k) { return Monomial{k, g}; }

// Element of the Pontryagin ring Z[G][x]; finitely many integer terms.
class LoopClass {
public:
  explicit LoopClass(SpaceSpec space);
  static LoopClass monomial(const SpaceSpec& space, int g, long long k, Int coeff = 1);

  const SpaceSpec& space() const { return space_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  void add_term(Monomial m, Int coeff);  // accumulates; zero results are erased
  bool is_zero() const { return terms_.empty(); }
  bool homogeneous() const;  // zero or all terms share one exponent k
  // Shared exponent of a non-zero homogeneous class.
  std::optional<long long> exponent() const;
  long long degree() const;  // k * (n - 1) of a non-zero homogeneous class

  friend bool operator==(const LoopClass& a, const LoopClass& b) {
    return a.space_.same_space(b.space_) && a.terms_ == b.terms_;
  }

private:
  SpaceSpec space_;
  std::map<Monomial, Int> terms_;
};

using TensorTerm = std::pair<Monomial, Monomial>;

// Element of H_*(Omega) tensor H_*(Omega); terms sorted by (k1, g1, k2, g2).
class TensorClass {
public:
  explicit TensorClass(SpaceSpec space);

  const SpaceSpec& space() const { return space_; }
  const std::map<TensorTerm, Int>& terms() const { return terms_; }
  void add_term(TensorTerm t, Int coeff);
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const TensorClass& a, const TensorClass& b) {
    return a.space_.same_space(b.space_) && a.terms_ == b.terms_;
  }

private:
  SpaceSpec space_;
  std::map<TensorTerm, Int> terms_;
};

LoopClass add(const LoopClass& a, const LoopClass& b);
LoopClass subtract(const LoopClass& a, const LoopClass& b);
LoopClass scale(const LoopClass& a, const Int& c);
// Pontryagin product: bilinear extension of (g, i)(h, j) = (gh, i+j).
LoopClass multiply(const LoopClass& a, const LoopClass& b);

TensorClass add(const TensorClass& a, const TensorClass& b);
TensorClass subtract(const TensorClass& a, const TensorClass& b);
TensorClass scale(const TensorClass& a, const Int& c);

// Deck transformation action: (g1 x^k1) ⊗ (g2 x^k2) -> (g1 tau x^k1) ⊗ (tau^-1 g2 x^k2).
TensorClass act_tensor(const TensorClass& t, int tau);
// Multiply the second tensor leg by a on the right.
TensorClass contract_right(const TensorClass& t, const LoopClass& a);
// Multiply the first tensor leg by a on the left.
TensorClass contract_left(const TensorClass& t, const LoopClass& a);

// Laurent model for the circle: H_*(Omega S^1) = Z[x, x^-1], all in degree 0.
using LaurentClass = std::map<long long, Int>;
using LaurentTensor = std::map<std::pair<long long, long long>, Int>;

void laurent_add_term(LaurentClass& c, long long k, Int coeff);
void laurent_add_term(LaurentTensor& t, long long k1, long long k2, Int coeff);
LaurentClass laurent_multiply(const LaurentClass& a, const LaurentClass& b);
LaurentTensor laurent_contract_right(const LaurentTensor& t, const LaurentClass& a);
LaurentTensor laurent_contract_left(const LaurentTensor& t, const LaurentClass& a);
LaurentTensor laurent_subtract(const LaurentTensor& a, const LaurentTensor& b);

}  // namespace loopcoprod
