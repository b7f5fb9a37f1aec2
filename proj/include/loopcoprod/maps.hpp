#pragma once

#include <functional>
#include <vector>

#include "loopcoprod/coproduct.hpp"

namespace loopcoprod {

// Based map data for transporting the coproduct along f: the monomial-level
// pushforward on Pontryagin rings plus the finite fiber of f over the
// basepoint (local degree and the class of the connecting loop f∘tau_i).
class MapData {
public:
  enum class Kind { covering, sphere_self_map, custom };

  // Universal covering S^n -> S^n/G; one preimage per deck element,
  // all of local degree +1.
  static MapData covering(int n, GroupPtr target_group);
  // Degree-d self map of S^n; |d| preimages of local degree sign(d).
  static MapData sphere_self_map(int n, long long degree);
  // Arbitrary data; the hypotheses behind the fiber formula are not
  // validated, so results carry the unchecked flag.
  static MapData custom(SpaceSpec source, SpaceSpec target,
                        std::vector<std::pair<int, int>> preimages,
                        std::function<LoopClass(const Monomial&)> push_monomial);

  Kind kind() const { return kind_; }
  const char* kind_name() const;
  const SpaceSpec& source() const { return source_; }
  const SpaceSpec& target() const { return target_; }
  // (local_degree, pi1_image) per basepoint preimage.
  const std::vector<std::pair<int, int>>& preimages() const { return preimages_; }
  bool unchecked() const { return unchecked_; }
  long long degree() const;  // sum of local degrees

  LoopClass push_monomial(const Monomial& m) const;

private:
  MapData(Kind kind, SpaceSpec source, SpaceSpec target,
          std::vector<std::pair<int, int>> preimages,
          std::function<LoopClass(const Monomial&)> push, bool unchecked, long long self_degree)
      : kind_(kind),
        source_(std::move(source)),
        target_(std::move(target)),
        preimages_(std::move(preimages)),
        push_(std::move(push)),
        unchecked_(unchecked),
        self_degree_(self_degree) {}

  Kind kind_;
  SpaceSpec source_, target_;
  std::vector<std::pair<int, int>> preimages_;
  std::function<LoopClass(const Monomial&)> push_;
  bool unchecked_;
  long long self_degree_;
};

// (Omega f)_* on loop homology, extended linearly.
LoopClass pushforward(const MapData& f, const LoopClass& a);
// (Omega f)_* ⊗ (Omega f)_* on tensors.
TensorClass pushforward_tensor(const MapData& f, const TensorClass& t);

// Fiber formula: sum_i local_degree_i * act_tensor((f⊗f)_* coproduct_src(a), [f∘tau_i]).
TensorClass coproduct_via_f(const MapData& f, const LoopClass& a);

// Coproduct assembled upstairs: each monomial g x^k lifts to u^k on the
// universal cover; the sphere coproduct terms are pushed down and spread
// over the deck group. Agrees with coproduct() termwise.
TensorClass coproduct_via_universal_cover(const LoopClass& a);

}  // namespace loopcoprod
