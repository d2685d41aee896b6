#include "knotdiff/chain.hpp"

#include <map>
#include <set>

namespace knotdiff {

void check_chain(const ChainElement& c) {
  for (const auto& [wc, coeff] : c.terms.terms())
    if (static_cast<int>(wc.word.size()) != c.degree)
      fail(ErrorKind::length_mismatch,
           "term word \"" + wc.word + "\" does not have degree " +
               std::to_string(c.degree));
}

std::pair<Word, int> boundary_letter(const Word& w, int i) {
  return w.delete_letter(i);
}

ChainElement boundary(const ChainElement& c) {
  check_chain(c);
  if (c.degree == 0)
    fail(ErrorKind::degree_zero, "degree-0 elements have no boundary");
  ChainElement out;
  out.degree = c.degree - 1;
  for (const auto& [wc, coeff] : c.terms.terms()) {
    Word w(wc.word);
    for (int i = 1; i <= c.degree; ++i) {
      auto [shorter, letter_sign] = w.delete_letter(i);
      int alt = i % 2 == 1 ? 1 : -1;
      out.terms.add({shorter.letters(), wc.cls}, coeff * alt * letter_sign);
    }
  }
  return out;
}

IntMatrix chain_matrix(const std::vector<ChainElement>& gens,
                       const std::vector<WordClass>& basis) {
  for (size_t j = 1; j < gens.size(); ++j)
    if (gens[j].degree != gens[0].degree)
      fail(ErrorKind::mixed_degree, "generators span several degrees");
  std::map<WordClass, int> row;
  for (size_t i = 0; i < basis.size(); ++i)
    row[basis[i]] = static_cast<int>(i);
  IntMatrix m(static_cast<int>(basis.size()), static_cast<int>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) {
    check_chain(gens[j]);
    for (const auto& [wc, coeff] : gens[j].terms.terms()) {
      auto it = row.find(wc);
      if (it == row.end())
        fail(ErrorKind::basis_incomplete,
             "support element " + format_word_class(wc) + " missing from basis");
      m.at(it->second, static_cast<int>(j)) = coeff;
    }
  }
  return m;
}

namespace {

// sorted union of the supports; map ordering makes this canonical
std::vector<WordClass> joint_basis(const std::vector<ChainElement>& a,
                                   const std::vector<ChainElement>& b) {
  std::set<WordClass> keys;
  for (const auto& c : a)
    for (const auto& [wc, coeff] : c.terms.terms()) keys.insert(wc);
  for (const auto& c : b)
    for (const auto& [wc, coeff] : c.terms.terms()) keys.insert(wc);
  return {keys.begin(), keys.end()};
}

}  // namespace

QuotientResult difference_rank(const std::vector<ChainElement>& gens_r,
                               const std::vector<ChainElement>& gens_r1) {
  int r = -1;
  for (const auto& c : gens_r) {
    if (r >= 0 && c.degree != r)
      fail(ErrorKind::mixed_degree, "degree-r generators disagree on r");
    r = c.degree;
  }
  std::vector<ChainElement> images;
  for (const auto& c : gens_r1) {
    if (r >= 0 && c.degree != r + 1)
      fail(ErrorKind::mixed_degree,
           "higher generators must sit one degree above");
    images.push_back(boundary(c));
    r = images.back().degree;
  }
  std::vector<WordClass> basis = joint_basis(gens_r, images);
  return lattice_quotient(chain_matrix(gens_r, basis),
                          chain_matrix(images, basis));
}

QuotientResult vassiliev_quotient_rank(
    const std::vector<ClassLabel>& classes,
    const std::vector<FormalSum<ClassLabel>>& sums) {
  std::set<ClassLabel> keys(classes.begin(), classes.end());
  for (const auto& s : sums)
    for (const auto& [cls, coeff] : s.terms()) keys.insert(cls);
  std::map<ClassLabel, int> row;
  int idx = 0;
  for (const auto& k : keys) row[k] = idx++;

  IntMatrix a(idx, static_cast<int>(classes.size()));
  for (size_t j = 0; j < classes.size(); ++j)
    a.at(row.at(classes[j]), static_cast<int>(j)) = 1;
  IntMatrix b(idx, static_cast<int>(sums.size()));
  for (size_t j = 0; j < sums.size(); ++j)
    for (const auto& [cls, coeff] : sums[j].terms())
      b.at(row.at(cls), static_cast<int>(j)) = coeff;
  return lattice_quotient(a, b);
}

}  // namespace knotdiff
