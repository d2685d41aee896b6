#pragma once
#include <functional>
#include <string>

#include "knotdiff/diagram.hpp"
#include "knotdiff/laurent.hpp"
#include "knotdiff/rational.hpp"
#include "knotdiff/word.hpp"

namespace knotdiff {

// state sums beyond 2^14 crossings are refused
inline constexpr int kBracketCrossingCap = 14;
// highest h-order served by default; raise explicitly when needed
inline constexpr int kDefaultSeriesOrder = 4;
// node budget for the skein recursion
inline constexpr long kConwayBudget = 100000;

// Kauffman bracket in A by exhaustive smoothing state sum; each loop past the
// first contributes -A^2 - A^-2, so a lone unknot gives 1.
Laurent kauffman_bracket(const Diagram& d);

// (-A)^{-3w} * bracket re-expressed in q = A^{-4}; unknot -> 1
Laurent jones(const Diagram& d);

// Conway polynomial in z via the skein recursion
// nabla(L+) - nabla(L-) = z * nabla(L0), with nabla(unknot) = 1 and
// nabla(split link) = 0.  Accepts links.
Laurent conway(const Diagram& d);

// order-2 invariant: coefficient of z^2 in the Conway polynomial
Int v2(const Diagram& d);

// coefficient of h^n in jones evaluated at q = e^h: each q^k contributes
// k^n / n! at order n; exact rational
Rat jones_series_coefficient(const Diagram& d, int n,
                             int max_order = kDefaultSeriesOrder);

// computable stand-in for the isomorphism type of a knot; equality (and
// ordering) use the polynomials only, the crossing count is informational
struct KnotClass {
  Laurent jones_poly{'q'};
  Laurent conway_poly{'z'};
  int min_crossings_seen = 0;

  bool operator==(const KnotClass& o) const {
    return jones_poly == o.jones_poly && conway_poly == o.conway_poly;
  }
  bool operator!=(const KnotClass& o) const { return !(*this == o); }
  bool operator<(const KnotClass& o) const {
    if (jones_poly != o.jones_poly) return jones_poly < o.jones_poly;
    return conway_poly < o.conway_poly;
  }
};

// simplify, then collect (jones, conway, crossing count)
KnotClass fingerprint(const Diagram& d);

// display text for a class: a catalog name (unknot, trefoil, figure8, ...)
// when the fingerprint matches one, else the serialized polynomials
std::string class_label(const KnotClass& k);

enum class VanishStatus { pass, fail, info };

struct VanishingReport {
  int r = 0;          // double points in the diagram
  int order = 0;      // invariant order tested
  Rat value;          // the signed sum over all 2^r resolutions
  VanishStatus status = VanishStatus::info;
};

// evaluates sum_w sign(w) * inv(k^w) over the 2^r resolutions of a singular
// diagram.  With r >= order+1 a finite-order invariant must vanish, so the
// report passes or fails on value == 0; at r == order the value is evidence
// of non-degeneracy and is only reported.  order > r is rejected.
VanishingReport vassiliev_vanishing_check(
    const std::function<Rat(const Diagram&)>& inv, const Diagram& singular,
    int order, int cap = kDefaultWordCap);

}  // namespace knotdiff
