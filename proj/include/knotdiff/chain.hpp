#pragma once
#include <utility>
#include <vector>

#include "knotdiff/formal_sum.hpp"
#include "knotdiff/matrix.hpp"
#include "knotdiff/system.hpp"

namespace knotdiff {

// word-weighted sum in one degree; every word in the support has length
// exactly `degree`
struct ChainElement {
  int degree = 0;
  FormalSum<WordClass> terms;
};

// enforces the uniform-word-length invariant
void check_chain(const ChainElement& c);

// (w with the 1-based i-th letter removed, +1 for a / -1 for b)
std::pair<Word, int> boundary_letter(const Word& w, int i);

// d = sum_i (-1)^{i+1} * boundary_i, extended over sums; class labels are
// constants and ride along untouched
ChainElement boundary(const ChainElement& c);

// column j = coordinates of generator j; the basis must cover every support
IntMatrix chain_matrix(const std::vector<ChainElement>& gens,
                       const std::vector<WordClass>& basis);

// sampled difference group at degree r: the span of gens_r modulo the
// boundaries of gens_r1, over their joint support basis
QuotientResult difference_rank(const std::vector<ChainElement>& gens_r,
                               const std::vector<ChainElement>& gens_r1);

// rank of (span of the classes)/(span of the sums): how many independent
// order-r invariants the sample can still see
QuotientResult vassiliev_quotient_rank(
    const std::vector<ClassLabel>& classes,
    const std::vector<FormalSum<ClassLabel>>& sums);

}  // namespace knotdiff
