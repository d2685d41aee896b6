#pragma once
#include <compare>
#include <functional>
#include <string>

#include "knotdiff/diagram.hpp"
#include "knotdiff/formal_sum.hpp"
#include "knotdiff/word.hpp"

namespace knotdiff {

// display/sort key standing in for an isomorphism class; knots use catalog
// names or serialized fingerprints, group products use element indices
using ClassLabel = std::string;

// basis element of word-weighted sums; the default ordering (word first,
// then label) fixes every downstream basis and matrix column order
struct WordClass {
  std::string word;
  ClassLabel cls;
  auto operator<=>(const WordClass&) const = default;
};

// ("w", label)
std::string format_word_class(const WordClass& wc);

// a family of 2^r variants reached by independent two-way choices, exposed
// through a deterministic resolver from choice words to class labels
struct ResolutionSystem {
  int r = 0;
  std::function<ClassLabel(const Word&)> resolver;
};

// {k}: sum over all words of length r of sign(w) * class(k^w); coefficients
// collapse when resolutions coincide
FormalSum<ClassLabel> alternating_sum(const ResolutionSystem& s,
                                      int cap = kDefaultWordCap);

// (k): one +1 term per word, tagged with its word
FormalSum<WordClass> weighted_sum(const ResolutionSystem& s,
                                  int cap = kDefaultWordCap);

// knots: resolver = label of fingerprint of simplified resolution, memoized
// per system
ResolutionSystem knot_system(const Diagram& d);

}  // namespace knotdiff
