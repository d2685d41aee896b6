#include "knotdiff/word.hpp"

namespace knotdiff {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'a' && c != 'b')
      fail(ErrorKind::malformed_entry,
           std::string("word letter must be 'a' or 'b', got '") + c + "'");
}

char Word::at(int i) const {
  if (i < 1 || i > size())
    fail(ErrorKind::index_out_of_range,
         "letter index " + std::to_string(i) + " out of range for word of length " +
             std::to_string(size()));
  return letters_[i - 1];
}

int Word::sign() const {
  int n = 0;
  for (char c : letters_) n += (c == 'b');
  return (n % 2 == 0) ? 1 : -1;
}

std::pair<Word, int> Word::delete_letter(int i) const {
  char c = at(i);
  std::string rest = letters_;
  rest.erase(static_cast<size_t>(i - 1), 1);
  return {Word(std::move(rest)), c == 'b' ? -1 : 1};
}

Word Word::flipped(int i) const {
  char c = at(i);
  std::string out = letters_;
  out[static_cast<size_t>(i - 1)] = (c == 'a') ? 'b' : 'a';
  return Word(std::move(out));
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size())
    return letters_.size() < o.letters_.size();
  return letters_ < o.letters_;  // 'a' < 'b' in ASCII
}

std::vector<Word> all_words(int r, int cap) {
  if (r < 0) fail(ErrorKind::index_out_of_range, "negative word length");
  if (r > cap)
    fail(ErrorKind::cap_exceeded, "word length " + std::to_string(r) +
                                      " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Word> out;
  out.reserve(size_t{1} << r);
  for (size_t m = 0; m < (size_t{1} << r); ++m) {
    std::string s(static_cast<size_t>(r), 'a');
    for (int j = 0; j < r; ++j)
      if (m >> (r - 1 - j) & 1) s[static_cast<size_t>(j)] = 'b';
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace knotdiff
