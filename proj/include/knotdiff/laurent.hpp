#pragma once
#include <map>
#include <string>
#include <vector>

#include "knotdiff/errors.hpp"
#include "knotdiff/rational.hpp"

namespace knotdiff {

// Laurent polynomial with exact rational coefficients over a named variable.
// Mixing variables in arithmetic is a programming error and throws internal.
class Laurent {
public:
  explicit Laurent(char var = 'q') : var_(var) {}
  static Laurent constant(char var, const Rat& c);
  static Laurent monomial(char var, int exp, const Rat& c = 1);

  char var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rat>& terms() const { return terms_; }  // exp -> coeff, no zeros

  Rat coefficient(int exp) const;
  int min_exp() const;  // throws on zero polynomial
  int max_exp() const;

  void add_term(int exp, const Rat& c);

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  bool operator==(const Laurent& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // order by term list (exponent-ascending lexicographic); var is not compared
  bool operator<(const Laurent& o) const;

  // substitute var -> new_var^k (k may be negative); every resulting exponent
  // must be integral, i.e. old exponents need not be checked since k is integer
  Laurent substituted(char new_var, int k) const;

  // evaluate the substitution var -> (new_var)^(1/k): requires every exponent
  // divisible by k; used to re-express bracket output in the Jones variable
  Laurent root_substituted(char new_var, int k) const;

  // ascending exponents, e.g. "-q^-4 + q^-3 + q^-1"; zero prints "0"
  std::string str() const;

private:
  char var_;
  std::map<int, Rat> terms_;
  void check_var(const Laurent& o) const;
};

}  // namespace knotdiff
