#pragma once
#include <string>
#include <utility>
#include <vector>

#include "knotdiff/system.hpp"

namespace knotdiff {

// finite group given by its full multiplication table over element indices;
// table[i][j] is the product "i then j"
struct Group {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int identity = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int i, int j) const;

  // shape, identity, inverses, associativity; throws invalid_group
  void validate() const;

  static Group cyclic(int n);
  static Group symmetric3();
  // {"name":…, "elements":[…], "table":[[…],…]}; identity is located by
  // validation rather than declared
  static Group from_json(const std::string& text);
};

// r ordered factor pairs (g_a, g_b); each letter picks one factor
struct GroupProductSystem {
  Group group;
  std::vector<std::pair<int, int>> factors;
};

// the ordered product g_1^{w_1} * ... * g_r^{w_r}
int group_resolve(const GroupProductSystem& s, const Word& w);

// adapter into the generic calculus; class labels are element indices as text
ResolutionSystem group_system(const GroupProductSystem& s);

}  // namespace knotdiff
