#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace knotdiff {

// Exact arithmetic backbone.  Header-only multiprecision types; no value in the
// engine is ever a float.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// canonical "p" or "p/q" with q > 0
inline std::string to_string(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace knotdiff
