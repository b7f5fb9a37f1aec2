#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loopcoprod/errors.hpp"

namespace loopcoprod {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group given by its full multiplication table over element indices
// 0..order-1. Index 0 is always the identity; loaders renumber if the input
// table has its identity elsewhere. Tables are validated on construction.
class FiniteGroup {
public:
  static constexpr int kMaxOrder = 128;

  static GroupPtr cyclic(int m);
  // Generalized quaternion group of the given order 4m, m >= 2.
  static GroupPtr quaternion(int order);
  static GroupPtr from_table(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  bool trivial() const { return order() == 1; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int g, int h) const { return mul(mul(h, g), inverse(h)); }  // h g h^-1
  void check_element(int g) const;
  int element_order(int g) const;
  bool is_cyclic() const;

  // Partition of the elements into conjugacy classes; members sorted, classes
  // sorted by their smallest member (the representative).
  std::vector<std::vector<int>> conjugacy_classes() const;

  struct Subgroup {
    GroupPtr group;
    std::vector<int> embedding;  // subgroup index -> parent index, ascending
  };
  Subgroup centralizer(int g) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  bool same_as(const FiniteGroup& other) const { return table_ == other.table_; }

private:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<int> inverse)
      : name_(std::move(name)), table_(std::move(table)), inverse_(std::move(inverse)) {}

  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

}  // namespace loopcoprod
