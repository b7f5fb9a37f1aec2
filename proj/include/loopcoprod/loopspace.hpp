#pragma once

#include <string>
#include <vector>

#include "loopcoprod/algebra.hpp"
#include "loopcoprod/homology.hpp"

namespace loopcoprod {

// Columns of the two-step filtration that can contribute to total degree d:
// p in [0, n] with p = d mod (n-1) and a non-negative fiber row. Sorted;
// always one or two entries, a pair being {0, n-1} or {1, n}.
std::vector<int> e_infinity_columns(int n, int d);

// One degree of one connected component. pieces lists the filtration
// summands, sub first; when the extension is known (split, or the quotient
// vanishes) total carries the assembled group, otherwise only the
// associated graded is available.
struct LoopEntry {
  std::vector<AbelianGroup> pieces;
  bool split = true;
  bool resolved = true;
  AbelianGroup total;
};

// Component of the free loop space attached to one conjugacy class.
struct ComponentTable {
  int class_rep = 0;
  int class_size = 1;
  GroupPtr centralizer;                  // abstract group, not the embedding
  GradedAbelianGroup base_homology;      // H_*(S^n / centralizer), degrees 0..n
  std::vector<LoopEntry> entries;        // degrees 0..max_deg
  bool witness_exceptional = false;
};

struct LoopSpaceTable {
  SpaceSpec space;
  std::vector<ComponentTable> components;  // class-representative order
  std::vector<AbelianGroup> totals;        // degrees 0..max_deg
  std::vector<bool> total_known;           // false where a class is unresolved
  std::string note;                        // set for the exceptional witness case
};

ComponentTable component_homology(const SpaceSpec& space, int g, int max_deg,
                                  long long generator_cap = kDefaultGeneratorCap);
LoopSpaceTable full_table(const SpaceSpec& space, int max_deg,
                          long long generator_cap = kDefaultGeneratorCap);

}  // namespace loopcoprod
