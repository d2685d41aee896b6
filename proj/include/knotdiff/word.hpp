#pragma once
#include <string>
#include <utility>
#include <vector>

#include "knotdiff/errors.hpp"

namespace knotdiff {

// Enumeration guard: operations that walk all 2^r words refuse to run past
// this length unless the caller raises the cap explicitly.
inline constexpr int kDefaultWordCap = 20;

// A choice word: one letter per ordered double point, 'a' or 'b'.
// 'a' resolves the designated first strand as the over strand, 'b' as the
// under strand.
class Word {
public:
  Word() = default;
  explicit Word(std::string letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }
  char at(int i) const;  // 1-based

  // +1 or -1: parity of the number of 'b' letters
  int sign() const;

  // word with the i-th letter removed (1-based), paired with the sign
  // contributed by that letter (+1 for 'a', -1 for 'b')
  std::pair<Word, int> delete_letter(int i) const;

  Word flipped(int i) const;  // i-th letter swapped a<->b

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }
  bool operator<(const Word& o) const;

private:
  std::string letters_;
};

// All words of length r in lexicographic order with 'a' < 'b'.
// Throws cap_exceeded if r > cap, index_out_of_range if r < 0.
std::vector<Word> all_words(int r, int cap = kDefaultWordCap);

}  // namespace knotdiff
