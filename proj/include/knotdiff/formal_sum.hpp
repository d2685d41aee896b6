#pragma once
#include <map>
#include <string>
#include <utility>

#include "knotdiff/rational.hpp"

namespace knotdiff {

// Free abelian group element: finite-support map from basis values to nonzero
// integer coefficients.  Basis type must be totally ordered; iteration and
// printing follow that order, which makes every downstream serialization
// canonical.
template <typename B>
class FormalSum {
public:
  using Terms = std::map<B, Int>;

  FormalSum() = default;

  static FormalSum single(const B& b, Int coeff = 1) {
    FormalSum s;
    s.add(b, std::move(coeff));
    return s;
  }

  void add(const B& b, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Int coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Int(0) : it->second;
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  FormalSum& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= k;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Int& k, FormalSum a) { return a *= k; }
  friend FormalSum operator-(FormalSum a) { return a *= Int(-1); }

  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

private:
  Terms terms_;
};

// Push a sum through a basis map; fibers collapse additively.
template <typename B, typename Fn>
auto map_basis(const FormalSum<B>& s, Fn&& fn)
    -> FormalSum<std::decay_t<decltype(fn(std::declval<const B&>()))>> {
  FormalSum<std::decay_t<decltype(fn(std::declval<const B&>()))>> out;
  for (auto& [b, c] : s.terms()) out.add(fn(b), c);
  return out;
}

// "c1*[b1] + c2*[b2]" in basis order; empty sum prints "0".
// Formatter turns a basis value into its display text.
template <typename B, typename Fmt>
std::string format_sum(const FormalSum<B>& s, Fmt&& fmt) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [b, c] : s.terms()) {
    if (!first) out += " + ";
    first = false;
    out += c.str() + "*[" + fmt(b) + "]";
  }
  return out;
}

}  // namespace knotdiff
