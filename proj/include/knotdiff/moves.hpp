#pragma once

#include <array>
#include <vector>

#include "knotdiff/diagram.hpp"

namespace knotdiff {

// Orbits of the face permutation dart -> mate(next-port dart); one orbit per
// region of the plane, including the outer region.
std::vector<std::vector<int>> face_orbits(const Diagram& d);

// Crossings whose kink loop can be untwisted (classical, adjacent-port arc).
std::vector<int> r1_sites(const Diagram& d);

// Classical crossing pairs bounding a removable bigon (one strand passes
// over at both, the other under at both).
std::vector<std::array<int, 2>> r2_sites(const Diagram& d);

// A slide site: a triangular region whose side between face darts d2 and d3
// runs entirely over (or entirely under) the other two strands.
struct R3Site {
  int d1, d2, d3;  // face darts, one per crossing of the triangle
};
std::vector<R3Site> r3_sites(const Diagram& d);

Diagram r1_removed(const Diagram& d, int c);
Diagram r2_removed(const Diagram& d, int c1, int c2);
Diagram r3_applied(const Diagram& d, const R3Site& site);

// Insert a kink on the arc holding `dart`; variant 0..3 selects twist
// chirality and which passage comes first (variants 0,1 add writhe +1,
// variants 2,3 add -1).
Diagram r1_added(const Diagram& d, int dart, int variant);
// Turn one crossing-free loop into a one-crossing kink diagram component.
Diagram r1_added_on_loop(const Diagram& d, int variant);
// Poke the arc at face dart u across the arc at face dart v (both darts must
// lie on one face orbit); `over` chooses which strand ends on top.
Diagram r2_added(const Diagram& d, int u, int v, bool over);

// Greedy crossing-count reduction by untwists and bigon removals.
Diagram simplified(const Diagram& d);

// Apply `count` random moves (for invariance testing).  Draws from kink
// add/remove (if allow_r1), pokes, bigon removals, and slides.
Diagram random_moves(const Diagram& d, int count, unsigned seed, bool allow_r1);

}  // namespace knotdiff
