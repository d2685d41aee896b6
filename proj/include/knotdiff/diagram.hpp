#pragma once
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knotdiff/errors.hpp"
#include "knotdiff/word.hpp"

namespace knotdiff {

enum class CrossingKind { classical, singular };

// One 4-valent vertex.  Ports 0..3 run counterclockwise.  Port 0 is where the
// under strand enters (classical) or where the designated first strand enters
// (singular); that strand exits at port 2.  The other strand occupies ports
// 1 and 3 and enters at `over_in` (its role: over strand when classical,
// second strand when singular).
struct Crossing {
  CrossingKind kind = CrossingKind::classical;
  std::array<int, 4> dart{};  // dart id at each port
  int over_in = 3;            // 1 or 3
  int singular_index = 0;     // 1..r for singular crossings, else 0
};

struct Violation {
  ErrorKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct Proto;
class Diagram;
Proto to_proto(const Diagram& d);
Diagram materialize(const Proto& p);

// Knot/link diagram as a combinatorial map.  Darts are arc ends; dart id
// 4*c+p lives at crossing c, port p.  mate() pairs the two ends of each arc.
// Crossing-free closed components are tracked by a plain count.
// Instances are immutable: every operation returns a new diagram.
class Diagram {
public:
  Diagram() = default;

  int crossing_count() const { return static_cast<int>(cr_.size()); }
  int singular_count() const;
  int free_loops() const { return free_loops_; }
  const Crossing& crossing(int i) const;
  const std::vector<Crossing>& crossings() const { return cr_; }
  int dart_count() const { return 4 * crossing_count(); }
  int mate(int dart) const;
  int label(int dart) const;

  // strand enters crossing c at port p (by the crossing-local convention)
  bool entry_port(int c, int p) const;
  // +1 / -1 for a classical crossing; throws on singular
  int crossing_sign(int c) const;
  int writhe() const;  // sum of classical crossing signs

  // closed strands: cycles through crossings plus crossing-free loops
  int components() const;

  ValidationReport validate() const;

  // -- resolution ---------------------------------------------------------
  // One letter per double point in singular-index order: 'a' lifts the
  // designated first strand above, 'b' puts it below.  Result is classical.
  Diagram resolved(const Word& w) const;

  // renumber double points: perm[old_index-1] = new_index (a permutation of 1..r)
  Diagram reordered_singulars(const std::vector<int>& perm) const;
  // exchange the roles of first/second strand at one double point
  Diagram ab_swapped(int singular_index) const;

  // -- classical surgery --------------------------------------------------
  Diagram switched(int c) const;           // over <-> under at one crossing
  Diagram smoothed_oriented(int c) const;  // orientation-respecting smoothing
  Diagram relabeled(const std::map<int, int>& bijection) const;

  // relabeled code minimized over traversal starts (";O" suffix per
  // crossing-free loop); equal exactly for isomorphic diagrams, used for
  // memo keys and structural equality
  std::string canonical_code() const;
  bool operator==(const Diagram& o) const {
    return canonical_code() == o.canonical_code();
  }

private:
  std::vector<Crossing> cr_;
  std::vector<int> mate_;
  std::vector<int> label_;
  int free_loops_ = 0;

  void check_basic() const;  // internal structural sanity
  std::string code_from(int c0, int pair0) const;

  friend Diagram parse_pd(const std::string&);
  friend std::string serialize_pd(const Diagram&);
  friend struct Proto;
  friend Diagram materialize(const Proto&);
  friend Proto to_proto(const Diagram&);
};

// Text form: comma/whitespace separated X[i,j,k,l] (classical) and D[i,j,k,l]
// (singular) entries, '#' line comments.  Two labelings are accepted: arc
// labels (every label appears exactly twice) or consecutive half-edge labels
// 1..4n each appearing once.  Empty input is the 0-crossing unknot.
Diagram parse_pd(const std::string& text);
std::string serialize_pd(const Diagram& d);

// ---------------------------------------------------------------- surgery --
// Editable intermediate used by resolution, smoothing and the Reidemeister
// moves.  Arc keys replace darts: each key occurs in exactly two slots.
struct Proto {
  struct PC {
    CrossingKind kind = CrossingKind::classical;
    int over_in = 3;
    int singular_index = 0;
    std::array<int, 4> key{};
  };
  std::vector<PC> cr;
  int free_loops = 0;
  std::map<int, int> label;  // key -> preserved edge label (optional)
  int next_key = 0;

  int fresh() { return next_key++; }
  std::vector<std::pair<int, int>> slots_of(int key) const;
};

Proto to_proto(const Diagram& d);
Diagram materialize(const Proto& p);

// Remove crossings, reconnecting each one's strands by the given port pairing
// (ports p and p^pairing_xor(c) are joined).  2 = pass straight through,
// 1 and 3 = the two smoothings.  Fully consumed strands become free loops.
Proto spliced_out(const Proto& p, const std::set<int>& dead,
                  const std::function<int(int)>& pairing_xor);

}  // namespace knotdiff
