#include "knotdiff/laurent.hpp"

namespace knotdiff {

Laurent Laurent::constant(char var, const Rat& c) { return monomial(var, 0, c); }

Laurent Laurent::monomial(char var, int exp, const Rat& c) {
  Laurent p(var);
  p.add_term(exp, c);
  return p;
}

Rat Laurent::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Laurent::min_exp() const {
  if (terms_.empty()) fail(ErrorKind::internal, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) fail(ErrorKind::internal, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void Laurent::add_term(int exp, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent::check_var(const Laurent& o) const {
  if (var_ != o.var_)
    fail(ErrorKind::internal, std::string("variable mismatch: ") + var_ + " vs " + o.var_);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_var(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check_var(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  check_var(o);
  Laurent out(var_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out(var_);
  for (auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

bool Laurent::operator<(const Laurent& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return b != o.terms_.end();
}

Laurent Laurent::substituted(char new_var, int k) const {
  Laurent out(new_var);
  for (auto& [e, c] : terms_) out.add_term(e * k, c);
  return out;
}

Laurent Laurent::root_substituted(char new_var, int k) const {
  if (k == 0) fail(ErrorKind::internal, "zero root in substitution");
  Laurent out(new_var);
  for (auto& [e, c] : terms_) {
    if (e % k != 0)
      fail(ErrorKind::internal, "exponent " + std::to_string(e) +
                                    " not divisible by " + std::to_string(k));
    out.add_term(e / k, c);
  }
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string coeff = to_string(ac);
    if (e == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += var_;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace knotdiff
