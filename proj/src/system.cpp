#include "knotdiff/system.hpp"

#include <map>
#include <memory>

#include "knotdiff/invariants.hpp"
#include "knotdiff/moves.hpp"

namespace knotdiff {

std::string format_word_class(const WordClass& wc) {
  return "(\"" + wc.word + "\", " + wc.cls + ")";
}

FormalSum<ClassLabel> alternating_sum(const ResolutionSystem& s, int cap) {
  FormalSum<ClassLabel> out;
  for (const Word& w : all_words(s.r, cap))
    out.add(s.resolver(w), w.sign());
  return out;
}

FormalSum<WordClass> weighted_sum(const ResolutionSystem& s, int cap) {
  FormalSum<WordClass> out;
  for (const Word& w : all_words(s.r, cap))
    out.add({w.letters(), s.resolver(w)}, 1);
  return out;
}

ResolutionSystem knot_system(const Diagram& d) {
  if (d.components() != 1)
    fail(ErrorKind::multi_component,
         "resolution systems are built from knot diagrams");
  ResolutionSystem s;
  s.r = d.singular_count();
  auto memo = std::make_shared<std::map<std::string, ClassLabel>>();
  s.resolver = [d, memo](const Word& w) -> ClassLabel {
    auto it = memo->find(w.letters());
    if (it != memo->end()) return it->second;
    ClassLabel label = class_label(fingerprint(d.resolved(w)));
    memo->emplace(w.letters(), label);
    return label;
  };
  return s;
}

}  // namespace knotdiff
