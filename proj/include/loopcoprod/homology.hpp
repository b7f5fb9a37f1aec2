#pragma once

#include <string>

#include "loopcoprod/group.hpp"
#include "loopcoprod/matrix.hpp"

namespace loopcoprod {

// Finitely generated abelian group Z^rank + sum Z/t; torsion holds the
// invariant factors (> 1, each dividing the next).
struct AbelianGroup {
  long long rank = 0;
  std::vector<Int> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
std::string to_string(const AbelianGroup& g);
// Same group split into prime-power cyclic pieces.
std::string to_string_primary(const AbelianGroup& g);

struct GradedAbelianGroup {
  std::vector<AbelianGroup> by_degree;

  AbelianGroup at(int d) const {
    if (d < 0 || d >= static_cast<int>(by_degree.size())) return {};
    return by_degree[d];
  }
  int max_degree() const { return static_cast<int>(by_degree.size()) - 1; }
  friend bool operator==(const GradedAbelianGroup&, const GradedAbelianGroup&) = default;
};

// boundaries[i] is the boundary C_{i+1} -> C_i; compositions must vanish.
// Degrees above the supplied data are zero modules.
GradedAbelianGroup chain_homology(const std::vector<IntegerMatrix>& boundaries, int max_degree);

// Normalized bar resolution with trivial integer coefficients. The chain
// group in degree d has (|G|-1)^d generators; the count in degree
// max_degree+1 must stay within the cap.
inline constexpr long long kDefaultGeneratorCap = 2000000;
GradedAbelianGroup group_homology(const GroupPtr& G, int max_degree,
                                  long long generator_cap = kDefaultGeneratorCap);

// The 2-periodic resolution for Z/m: H_0 = Z, odd degrees Z/m, positive
// even degrees 0.
GradedAbelianGroup cyclic_periodic_homology(int m, int max_degree);

// H_*(S^n / C) up to degree n: Z in degree 0 and n, H_i(C) between.
GradedAbelianGroup quotient_space_homology(int n, const GroupPtr& C,
                                           long long generator_cap = kDefaultGeneratorCap);

}  // namespace loopcoprod
