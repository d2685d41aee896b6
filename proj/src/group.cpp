#include "knotdiff/group.hpp"

#include <array>
#include <set>

#include "json.hpp"

namespace knotdiff {

int Group::mul(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    fail(ErrorKind::index_out_of_range, "element index outside the group");
  return table[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

void Group::validate() const {
  int n = size();
  if (n == 0) fail(ErrorKind::invalid_group, "group has no elements");
  if (static_cast<int>(table.size()) != n)
    fail(ErrorKind::invalid_group, "multiplication table is not square");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::invalid_group, "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        fail(ErrorKind::invalid_group, "table entry outside the element range");
  }
  int e = -1;
  for (int i = 0; i < n; ++i) {
    bool left = true, right = true;
    for (int j = 0; j < n; ++j) {
      left = left && table[static_cast<size_t>(i)][static_cast<size_t>(j)] == j;
      right = right && table[static_cast<size_t>(j)][static_cast<size_t>(i)] == j;
    }
    if (left && right) {
      e = i;
      break;
    }
  }
  if (e < 0) fail(ErrorKind::invalid_group, "no two-sided identity element");
  if (e != identity)
    fail(ErrorKind::invalid_group, "declared identity is not the identity");
  for (int i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < n; ++j)
      has_inverse = has_inverse ||
                    (table[static_cast<size_t>(i)][static_cast<size_t>(j)] == e &&
                     table[static_cast<size_t>(j)][static_cast<size_t>(i)] == e);
    if (!has_inverse)
      fail(ErrorKind::invalid_group,
           "element " + elements[static_cast<size_t>(i)] + " has no inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k)))
          fail(ErrorKind::invalid_group, "multiplication is not associative");
}

Group Group::cyclic(int n) {
  if (n <= 0) fail(ErrorKind::invalid_group, "cyclic group needs n >= 1");
  Group g;
  g.name = "Z/" + std::to_string(n);
  for (int i = 0; i < n; ++i) g.elements.push_back(std::to_string(i));
  g.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  g.identity = 0;
  g.validate();
  return g;
}

Group Group::symmetric3() {
  // permutations of {1,2,3}; composition is left-to-right ("i then j")
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123)
      {2, 0, 1},  // (132)
  }};
  Group g;
  g.name = "S_3";
  g.elements = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  g.table.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x)
        comp[static_cast<size_t>(x)] =
            perms[static_cast<size_t>(j)][static_cast<size_t>(
                perms[static_cast<size_t>(i)][static_cast<size_t>(x)])];
      int idx = -1;
      for (int k = 0; k < 6; ++k)
        if (perms[static_cast<size_t>(k)] == comp) idx = k;
      g.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = idx;
    }
  g.identity = 0;
  g.validate();
  return g;
}

Group Group::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::malformed_entry, std::string("bad group JSON: ") + e.what());
  }
  Group g;
  try {
    g.name = j.value("name", "");
    for (const auto& e : j.at("elements")) g.elements.push_back(e.get<std::string>());
    for (const auto& row : j.at("table")) {
      g.table.emplace_back();
      for (const auto& v : row) g.table.back().push_back(v.get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::malformed_entry, std::string("bad group JSON: ") + e.what());
  }
  // locate the identity, then run the full check
  int n = g.size();
  g.identity = -1;
  for (int i = 0; i < n && g.identity < 0; ++i) {
    bool two_sided = static_cast<int>(g.table.size()) == n;
    for (int k = 0; two_sided && k < n; ++k)
      two_sided = static_cast<int>(g.table[static_cast<size_t>(k)].size()) == n &&
                  g.table[static_cast<size_t>(i)][static_cast<size_t>(k)] == k &&
                  g.table[static_cast<size_t>(k)][static_cast<size_t>(i)] == k;
    if (two_sided) g.identity = i;
  }
  if (g.identity < 0)
    fail(ErrorKind::invalid_group, "no two-sided identity element");
  g.validate();
  return g;
}

int group_resolve(const GroupProductSystem& s, const Word& w) {
  int r = static_cast<int>(s.factors.size());
  if (w.size() != r)
    fail(ErrorKind::length_mismatch,
         "word length " + std::to_string(w.size()) + " does not match " +
             std::to_string(r) + " factors");
  int acc = s.group.identity;
  for (int i = 1; i <= r; ++i) {
    const auto& [ga, gb] = s.factors[static_cast<size_t>(i - 1)];
    acc = s.group.mul(acc, w.at(i) == 'a' ? ga : gb);
  }
  return acc;
}

ResolutionSystem group_system(const GroupProductSystem& s) {
  s.group.validate();
  for (const auto& [ga, gb] : s.factors)
    if (ga < 0 || gb < 0 || ga >= s.group.size() || gb >= s.group.size())
      fail(ErrorKind::index_out_of_range, "factor element outside the group");
  ResolutionSystem out;
  out.r = static_cast<int>(s.factors.size());
  out.resolver = [s](const Word& w) {
    return std::to_string(group_resolve(s, w));
  };
  return out;
}

}  // namespace knotdiff
