#include "knotdiff/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace knotdiff {

namespace {
inline int cr_of(int dart) { return dart >> 2; }
inline int port_of(int dart) { return dart & 3; }

// minimal union-find over arbitrary int keys
struct UF {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) {
      parent[x] = x;
      return x;
    }
    int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

int Diagram::singular_count() const {
  int r = 0;
  for (auto& c : cr_) r += (c.kind == CrossingKind::singular);
  return r;
}

const Crossing& Diagram::crossing(int i) const {
  if (i < 0 || i >= crossing_count())
    fail(ErrorKind::index_out_of_range, "crossing index " + std::to_string(i));
  return cr_[static_cast<size_t>(i)];
}

int Diagram::mate(int dart) const {
  if (dart < 0 || dart >= dart_count())
    fail(ErrorKind::index_out_of_range, "dart id " + std::to_string(dart));
  return mate_[static_cast<size_t>(dart)];
}

int Diagram::label(int dart) const {
  if (dart < 0 || dart >= dart_count())
    fail(ErrorKind::index_out_of_range, "dart id " + std::to_string(dart));
  return label_[static_cast<size_t>(dart)];
}

bool Diagram::entry_port(int c, int p) const {
  if (p == 0) return true;
  if (p == 2) return false;
  return p == crossing(c).over_in;
}

int Diagram::crossing_sign(int c) const {
  const Crossing& x = crossing(c);
  if (x.kind != CrossingKind::classical)
    fail(ErrorKind::singular_present, "sign of a singular crossing is undefined");
  return x.over_in == 3 ? 1 : -1;
}

int Diagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c)
    if (cr_[static_cast<size_t>(c)].kind == CrossingKind::classical)
      w += crossing_sign(c);
  return w;
}

int Diagram::components() const {
  int n = crossing_count();
  std::vector<char> seen(static_cast<size_t>(2 * n), 0);  // passage (c, pair)
  int comps = free_loops_;
  for (int c = 0; c < n; ++c) {
    for (int pair = 0; pair < 2; ++pair) {
      if (seen[static_cast<size_t>(2 * c + pair)]) continue;
      ++comps;
      int u = cr_[static_cast<size_t>(c)].dart[static_cast<size_t>(pair)];
      int u0 = u;
      do {
        seen[static_cast<size_t>(2 * cr_of(u) + (port_of(u) & 1))] = 1;
        u = mate_[static_cast<size_t>(u ^ 2)];
      } while (u != u0);
    }
  }
  return comps;
}

void Diagram::check_basic() const {
  size_t nd = static_cast<size_t>(dart_count());
  if (mate_.size() != nd || label_.size() != nd)
    fail(ErrorKind::internal, "dart table size mismatch");
  for (int d = 0; d < dart_count(); ++d) {
    int m = mate_[static_cast<size_t>(d)];
    if (m < 0 || m >= dart_count() || m == d || mate_[static_cast<size_t>(m)] != d)
      fail(ErrorKind::internal, "arc pairing is not a fixed-point-free involution");
  }
  for (int c = 0; c < crossing_count(); ++c) {
    const Crossing& x = cr_[static_cast<size_t>(c)];
    if (x.over_in != 1 && x.over_in != 3)
      fail(ErrorKind::internal, "over_in must be 1 or 3");
    for (int p = 0; p < 4; ++p)
      if (x.dart[static_cast<size_t>(p)] != 4 * c + p)
        fail(ErrorKind::internal, "dart layout corrupted");
  }
}

ValidationReport Diagram::validate() const {
  ValidationReport rep;
  // label discipline: arc labels (both ends equal, each label on one arc) or
  // half-edge labels (all 4n distinct, consecutive 1..4n)
  bool all_equal = true, all_distinct = true;
  std::map<int, int> label_arcs;  // label -> number of arcs carrying it
  std::set<int> dart_labels;
  for (int d = 0; d < dart_count(); ++d) {
    int m = mate_[static_cast<size_t>(d)];
    if (label_[static_cast<size_t>(d)] <= 0) {
      rep.violations.push_back({ErrorKind::malformed_entry,
                                "edge label must be a positive integer"});
      return rep;
    }
    if (d < m) {
      if (label_[static_cast<size_t>(d)] == label_[static_cast<size_t>(m)])
        ++label_arcs[label_[static_cast<size_t>(d)]];
      else
        all_equal = false;
    }
    if (!dart_labels.insert(label_[static_cast<size_t>(d)]).second) all_distinct = false;
  }
  if (crossing_count() > 0) {
    if (all_equal) {
      for (auto& [lab, cnt] : label_arcs)
        if (cnt != 1)
          rep.violations.push_back(
              {ErrorKind::edge_count, "edge label " + std::to_string(lab) +
                                          " used by " + std::to_string(2 * cnt) +
                                          " crossing positions (want 2)"});
    } else if (all_distinct) {
      int lo = *dart_labels.begin(), hi = *dart_labels.rbegin();
      if (lo != 1 || hi != dart_count())
        rep.violations.push_back(
            {ErrorKind::edge_count,
             "half-edge labels must be exactly 1.." + std::to_string(dart_count())});
    } else {
      rep.violations.push_back(
          {ErrorKind::edge_count,
           "mixed edge labeling: labels must appear exactly twice, or all be distinct"});
    }
  }
  // orientation: every arc needs one entry end and one exit end
  for (int d = 0; d < dart_count(); ++d) {
    int m = mate_[static_cast<size_t>(d)];
    if (d > m) continue;
    bool ein = entry_port(cr_of(d), port_of(d));
    bool min = entry_port(cr_of(m), port_of(m));
    if (ein == min)
      rep.violations.push_back(
          {ErrorKind::connectivity,
           "edge " + std::to_string(label_[static_cast<size_t>(d)]) +
               " does not run head-to-tail between its crossings"});
    // a strand may revisit its own crossing only as a kink (adjacent ports)
    if (cr_of(d) == cr_of(m) && ((port_of(d) ^ port_of(m)) == 2))
      rep.violations.push_back(
          {ErrorKind::connectivity,
           "edge " + std::to_string(label_[static_cast<size_t>(d)]) +
               " joins opposite ports of one crossing (not a kink)"});
  }
  // singular indices must be exactly 1..r
  std::set<int> sidx;
  int r = 0;
  for (auto& x : cr_)
    if (x.kind == CrossingKind::singular) {
      ++r;
      if (!sidx.insert(x.singular_index).second)
        rep.violations.push_back({ErrorKind::ordering,
                                  "duplicate double-point index " +
                                      std::to_string(x.singular_index)});
    }
  if (!sidx.empty() && (*sidx.begin() != 1 || *sidx.rbegin() != r))
    rep.violations.push_back(
        {ErrorKind::ordering, "double-point indices must be exactly 1.." +
                                  std::to_string(r)});
  return rep;
}

// ------------------------------------------------------------------ parse --

namespace {

struct RawEntry {
  bool singular;
  std::array<int, 4> lab;
};

std::vector<RawEntry> tokenize_pd(const std::string& text) {
  std::vector<RawEntry> out;
  size_t i = 0, n = text.size();
  auto skip_space = [&] {
    while (i < n) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '#') {
        while (i < n && text[i] != '\n') ++i;
      } else {
        break;
      }
    }
  };
  auto skip_ws = [&] {  // between entries: commas are separators too
    for (skip_space(); i < n && text[i] == ','; skip_space()) ++i;
  };
  for (skip_ws(); i < n; skip_ws()) {
    char head = text[i];
    if (head != 'X' && head != 'D')
      fail(ErrorKind::malformed_entry,
           "expected X[...] or D[...] at offset " + std::to_string(i));
    ++i;
    skip_space();
    if (i >= n || text[i] != '[')
      fail(ErrorKind::malformed_entry, "expected '[' after entry head");
    ++i;
    RawEntry e{head == 'D', {}};
    for (int k = 0; k < 4; ++k) {
      skip_space();
      size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start)
        fail(ErrorKind::malformed_entry, "expected edge label in entry");
      long v = std::stol(text.substr(start, i - start));
      if (v <= 0 || v > 1000000)
        fail(ErrorKind::malformed_entry,
             "edge label out of range: " + std::to_string(v));
      e.lab[static_cast<size_t>(k)] = static_cast<int>(v);
      skip_space();
      if (k < 3) {
        if (i >= n || text[i] != ',')
          fail(ErrorKind::malformed_entry, "expected ',' between edge labels");
        ++i;
      }
    }
    if (i >= n || text[i] != ']')
      fail(ErrorKind::malformed_entry, "expected ']' closing entry");
    ++i;
    out.push_back(e);
  }
  return out;
}

}  // namespace

Diagram parse_pd(const std::string& text) {
  std::vector<RawEntry> entries = tokenize_pd(text);
  Diagram d;
  if (entries.empty()) {
    d.free_loops_ = 1;  // 0-crossing unknot
    return d;
  }
  int n = static_cast<int>(entries.size());
  d.cr_.resize(static_cast<size_t>(n));
  d.label_.resize(static_cast<size_t>(4 * n));
  d.mate_.assign(static_cast<size_t>(4 * n), -1);
  int next_sidx = 1;
  for (int c = 0; c < n; ++c) {
    Crossing& x = d.cr_[static_cast<size_t>(c)];
    x.kind = entries[static_cast<size_t>(c)].singular ? CrossingKind::singular
                                                      : CrossingKind::classical;
    if (x.kind == CrossingKind::singular) x.singular_index = next_sidx++;
    for (int p = 0; p < 4; ++p) {
      x.dart[static_cast<size_t>(p)] = 4 * c + p;
      d.label_[static_cast<size_t>(4 * c + p)] =
          entries[static_cast<size_t>(c)].lab[static_cast<size_t>(p)];
    }
  }

  // pair the darts into arcs
  std::map<int, std::vector<int>> occ;  // label -> darts
  for (int dd = 0; dd < 4 * n; ++dd) occ[d.label_[static_cast<size_t>(dd)]].push_back(dd);
  bool arc_form = true, half_form = true;
  for (auto& [lab, ds] : occ) {
    if (ds.size() != 2) arc_form = false;
    if (ds.size() != 1) half_form = false;
  }
  if (arc_form) {
    for (auto& [lab, ds] : occ) {
      d.mate_[static_cast<size_t>(ds[0])] = ds[1];
      d.mate_[static_cast<size_t>(ds[1])] = ds[0];
    }
  } else if (half_form) {
    // consecutive half-edge labels: arcs are adjacent pairs (e, e+1); which
    // pairing applies is pinned by the under-in / under-out slots
    if (occ.begin()->first != 1 || occ.rbegin()->first != 4 * n)
      fail(ErrorKind::edge_count,
           "half-edge labels must be exactly 1.." + std::to_string(4 * n));
    int scheme = -1;  // arcs start at odd labels (0) or even labels (1)
    auto vote = [&](int lab, bool is_arc_start) {
      int s = (lab % 2 == 1) == is_arc_start ? 0 : 1;
      if (scheme == -1) scheme = s;
      if (scheme != s)
        fail(ErrorKind::connectivity,
             "half-edge labels do not orient consistently");
    };
    for (int c = 0; c < n; ++c) {
      vote(d.label_[static_cast<size_t>(4 * c + 0)], false);  // strand enters
      vote(d.label_[static_cast<size_t>(4 * c + 2)], true);   // strand leaves
    }
    if (scheme == -1) scheme = 0;
    for (int e = 1 + scheme; ; e += 2) {
      int start = e > 4 * n ? e - 4 * n : e;
      int end = start % (4 * n) + 1;
      d.mate_[static_cast<size_t>(occ[start][0])] = occ[end][0];
      d.mate_[static_cast<size_t>(occ[end][0])] = occ[start][0];
      if (e + 2 > 4 * n + scheme) break;
    }
  } else {
    for (auto& [lab, ds] : occ)
      if (ds.size() != 2)
        fail(ErrorKind::edge_count, "edge label " + std::to_string(lab) +
                                        " appears " + std::to_string(ds.size()) +
                                        " times (want 2)");
  }

  // orient: propagate strand direction around each closed cycle; under-in and
  // first-strand-in slots pin it, label succession is a fallback for
  // components that never pass under
  std::vector<char> seen(static_cast<size_t>(2 * n), 0);
  for (int c = 0; c < n; ++c) {
    for (int pair = 0; pair < 2; ++pair) {
      if (seen[static_cast<size_t>(2 * c + pair)]) continue;
      std::vector<int> arrivals;
      int u0 = 4 * c + pair;
      int u = u0;
      do {
        seen[static_cast<size_t>(2 * cr_of(u) + (port_of(u) & 1))] = 1;
        arrivals.push_back(u);
        u = d.mate_[static_cast<size_t>(u ^ 2)];
      } while (u != u0);
      int fwd_pin = 0, rev_pin = 0;
      for (int a : arrivals) {
        if ((port_of(a) & 1) == 0) (port_of(a) == 0 ? fwd_pin : rev_pin)++;
      }
      bool flip;
      if (fwd_pin && rev_pin)
        fail(ErrorKind::connectivity,
             "strand orientation is inconsistent with the under-entry slots");
      if (fwd_pin || rev_pin) {
        flip = rev_pin > 0;
      } else {
        int fwd_vote = 0, rev_vote = 0;
        for (size_t k = 0; k < arrivals.size(); ++k) {
          int depart = arrivals[k] ^ 2;
          int next = arrivals[(k + 1) % arrivals.size()];
          if (d.label_[static_cast<size_t>(next)] ==
              d.label_[static_cast<size_t>(depart)] + 1)
            ++fwd_vote;
          if (d.label_[static_cast<size_t>(depart)] ==
              d.label_[static_cast<size_t>(next)] + 1)
            ++rev_vote;
        }
        flip = rev_vote > fwd_vote;
      }
      for (int a : arrivals) {
        if (port_of(a) & 1) {
          int eff = flip ? (port_of(a) ^ 2) : port_of(a);
          d.cr_[static_cast<size_t>(cr_of(a))].over_in = eff;
        }
      }
    }
  }

  d.check_basic();
  ValidationReport rep = d.validate();
  if (!rep.ok()) fail(rep.violations[0].kind, rep.violations[0].message);
  return d;
}

// -------------------------------------------------------------- serialize --

namespace {

std::string emit_entries(const Diagram& d) {
  std::string out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossing(c);
    if (c) out += ", ";
    out += (x.kind == CrossingKind::singular) ? "D[" : "X[";
    for (int p = 0; p < 4; ++p) {
      if (p) out += ",";
      out += std::to_string(d.label(4 * c + p));
    }
    out += "]";
  }
  return out;
}

}  // namespace

std::string serialize_pd(const Diagram& d) {
  if (d.crossing_count() == 0) return "";
  if (d.free_loops_ > 0)
    fail(ErrorKind::internal,
         "cannot serialize crossing-free loops alongside crossings");
  bool all_equal = true, all_distinct = true;
  std::set<int> labs;
  for (int dd = 0; dd < d.dart_count(); ++dd) {
    if (d.label_[static_cast<size_t>(dd)] !=
        d.label_[static_cast<size_t>(d.mate_[static_cast<size_t>(dd)])])
      all_equal = false;
    if (!labs.insert(d.label_[static_cast<size_t>(dd)]).second) all_distinct = false;
  }
  if (all_equal || all_distinct) return emit_entries(d);
  // mixed labels after surgery: fall back to a fresh canonical labeling
  Proto p = to_proto(d);
  p.label.clear();
  return emit_entries(materialize(p));
}

// serialize with crossings renumbered by first visit along the strand walk
// from (c0, pair0); arc labels in traversal order.  taking the minimum over
// every start makes the code independent of how the diagram was assembled
std::string Diagram::code_from(int c0, int pair0) const {
  int n = crossing_count();
  std::vector<int> rank(static_cast<size_t>(n), -1);  // crossing -> visit order
  std::map<int, int> arc_label;                       // min dart of arc -> label
  int next_rank = 0, next_arc = 1;
  std::vector<char> walked(static_cast<size_t>(2 * n), 0);
  auto walk = [&](int c, int pair) {
    int entry = pair == 0 ? 0 : cr_[static_cast<size_t>(c)].over_in;
    int u0 = 4 * c + entry;
    int u = u0;
    do {
      int cu = cr_of(u);
      if (rank[static_cast<size_t>(cu)] < 0) rank[static_cast<size_t>(cu)] = next_rank++;
      walked[static_cast<size_t>(2 * cu + (port_of(u) & 1))] = 1;
      int depart = u ^ 2;
      int key = std::min(depart, mate_[static_cast<size_t>(depart)]);
      if (!arc_label.count(key)) arc_label[key] = next_arc++;
      u = mate_[static_cast<size_t>(depart)];
    } while (u != u0);
  };
  walk(c0, pair0);
  // further strands start at the lowest-ranked crossing touched so far; a
  // split remainder falls back to storage order
  for (;;) {
    int best_c = -1, best_pair = 0;
    auto better = [&](int c, int pair) {
      if (best_c < 0) return true;
      long sa = rank[static_cast<size_t>(c)] < 0 ? n + c : rank[static_cast<size_t>(c)];
      long sb = rank[static_cast<size_t>(best_c)] < 0 ? n + best_c
                                                      : rank[static_cast<size_t>(best_c)];
      return sa != sb ? sa < sb : pair < best_pair;
    };
    for (int c = 0; c < n; ++c)
      for (int pair = 0; pair < 2; ++pair)
        if (!walked[static_cast<size_t>(2 * c + pair)] && better(c, pair)) {
          best_c = c;
          best_pair = pair;
        }
    if (best_c < 0) break;
    walk(best_c, best_pair);
  }
  std::vector<int> by_rank(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) by_rank[static_cast<size_t>(rank[static_cast<size_t>(c)])] = c;
  std::string out;
  for (int r = 0; r < n; ++r) {
    int c = by_rank[static_cast<size_t>(r)];
    const Crossing& x = cr_[static_cast<size_t>(c)];
    if (r) out += ",";
    out += (x.kind == CrossingKind::singular)
               ? ("D" + std::to_string(x.singular_index))
               : (x.over_in == 3 ? "Xp" : "Xn");
    out += "[";
    for (int p = 0; p < 4; ++p) {
      int dd = 4 * c + p;
      int key = std::min(dd, mate_[static_cast<size_t>(dd)]);
      if (p) out += ",";
      out += std::to_string(arc_label.at(key));
    }
    // singular crossings also need the second strand's direction
    if (x.kind == CrossingKind::singular)
      out += x.over_in == 3 ? "+" : "-";
    out += "]";
  }
  return out;
}

std::string Diagram::canonical_code() const {
  std::string best;
  for (int c = 0; c < crossing_count(); ++c)
    for (int pair = 0; pair < 2; ++pair) {
      std::string code = code_from(c, pair);
      if (best.empty() || code < best) best = std::move(code);
    }
  for (int i = 0; i < free_loops_; ++i) best += ";O";
  return best;
}

// ------------------------------------------------------------- resolution --

Diagram Diagram::resolved(const Word& w) const {
  int r = singular_count();
  if (w.size() != r)
    fail(ErrorKind::length_mismatch,
         "word length " + std::to_string(w.size()) + " does not match " +
             std::to_string(r) + " double points");
  Proto p = to_proto(*this);
  for (auto& x : p.cr) {
    if (x.kind != CrossingKind::singular) continue;
    char letter = w.at(x.singular_index);
    x.kind = CrossingKind::classical;
    x.singular_index = 0;
    if (letter == 'a') {
      // designated first strand goes on top: rotate so the second strand
      // provides the under-entry at port 0
      int s = x.over_in;
      std::array<int, 4> k = x.key;
      for (int q = 0; q < 4; ++q) x.key[static_cast<size_t>(q)] = k[static_cast<size_t>((q + s) & 3)];
      x.over_in = 4 - s;
    }
    // letter 'b': first strand stays under; layout already has it at port 0
  }
  return materialize(p);
}

Diagram Diagram::reordered_singulars(const std::vector<int>& perm) const {
  int r = singular_count();
  if (static_cast<int>(perm.size()) != r)
    fail(ErrorKind::length_mismatch, "permutation size does not match double points");
  std::set<int> vals(perm.begin(), perm.end());
  if (static_cast<int>(vals.size()) != r ||
      (r > 0 && (*vals.begin() != 1 || *vals.rbegin() != r)))
    fail(ErrorKind::ordering, "not a permutation of 1..r");
  Proto p = to_proto(*this);
  for (auto& x : p.cr)
    if (x.kind == CrossingKind::singular)
      x.singular_index = perm[static_cast<size_t>(x.singular_index - 1)];
  return materialize(p);
}

Diagram Diagram::ab_swapped(int singular_index) const {
  Proto p = to_proto(*this);
  bool found = false;
  for (auto& x : p.cr) {
    if (x.kind != CrossingKind::singular || x.singular_index != singular_index)
      continue;
    found = true;
    int s = x.over_in;
    std::array<int, 4> k = x.key;
    for (int q = 0; q < 4; ++q) x.key[static_cast<size_t>(q)] = k[static_cast<size_t>((q + s) & 3)];
    x.over_in = 4 - s;
  }
  if (!found)
    fail(ErrorKind::index_out_of_range,
         "no double point with index " + std::to_string(singular_index));
  return materialize(p);
}

Diagram Diagram::switched(int c) const {
  const Crossing& x = crossing(c);
  if (x.kind != CrossingKind::classical)
    fail(ErrorKind::singular_present, "switch requires a classical crossing");
  Proto p = to_proto(*this);
  Proto::PC& pc = p.cr[static_cast<size_t>(c)];
  int s = pc.over_in;
  std::array<int, 4> k = pc.key;
  for (int q = 0; q < 4; ++q) pc.key[static_cast<size_t>(q)] = k[static_cast<size_t>((q + s) & 3)];
  pc.over_in = 4 - s;
  return materialize(p);
}

Diagram Diagram::smoothed_oriented(int c) const {
  const Crossing& x = crossing(c);
  if (x.kind != CrossingKind::classical)
    fail(ErrorKind::singular_present, "smoothing requires a classical crossing");
  int pairing = x.over_in == 3 ? 1 : 3;
  Proto p = spliced_out(to_proto(*this), {c}, [pairing](int) { return pairing; });
  return materialize(p);
}

Diagram Diagram::relabeled(const std::map<int, int>& bijection) const {
  std::set<int> targets;
  for (auto& [from, to] : bijection) {
    if (to <= 0 || !targets.insert(to).second)
      fail(ErrorKind::malformed_entry, "relabeling is not a bijection onto positive labels");
  }
  Diagram d = *this;
  for (auto& lab : d.label_) {
    auto it = bijection.find(lab);
    if (it == bijection.end())
      fail(ErrorKind::malformed_entry,
           "relabeling misses edge label " + std::to_string(lab));
    lab = it->second;
  }
  return d;
}

// ----------------------------------------------------------------- surgery --

std::vector<std::pair<int, int>> Proto::slots_of(int key) const {
  std::vector<std::pair<int, int>> out;
  for (size_t c = 0; c < cr.size(); ++c)
    for (int p = 0; p < 4; ++p)
      if (cr[c].key[static_cast<size_t>(p)] == key)
        out.emplace_back(static_cast<int>(c), p);
  return out;
}

Proto to_proto(const Diagram& d) {
  Proto p;
  p.free_loops = d.free_loops_;
  p.next_key = d.dart_count();
  p.cr.resize(static_cast<size_t>(d.crossing_count()));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.cr_[static_cast<size_t>(c)];
    Proto::PC& pc = p.cr[static_cast<size_t>(c)];
    pc.kind = x.kind;
    pc.over_in = x.over_in;
    pc.singular_index = x.singular_index;
    for (int q = 0; q < 4; ++q) {
      int dd = 4 * c + q;
      int key = std::min(dd, d.mate_[static_cast<size_t>(dd)]);
      pc.key[static_cast<size_t>(q)] = key;
      if (dd <= d.mate_[static_cast<size_t>(dd)] &&
          d.label_[static_cast<size_t>(dd)] ==
              d.label_[static_cast<size_t>(d.mate_[static_cast<size_t>(dd)])])
        p.label[key] = d.label_[static_cast<size_t>(dd)];
    }
  }
  return p;
}

Diagram materialize(const Proto& p) {
  Diagram d;
  d.free_loops_ = p.free_loops;
  int n = static_cast<int>(p.cr.size());
  d.cr_.resize(static_cast<size_t>(n));
  d.mate_.assign(static_cast<size_t>(4 * n), -1);
  d.label_.assign(static_cast<size_t>(4 * n), 0);
  std::map<int, std::vector<int>> occ;  // key -> darts
  for (int c = 0; c < n; ++c) {
    Crossing& x = d.cr_[static_cast<size_t>(c)];
    const Proto::PC& pc = p.cr[static_cast<size_t>(c)];
    x.kind = pc.kind;
    x.over_in = pc.over_in;
    x.singular_index = pc.singular_index;
    for (int q = 0; q < 4; ++q) {
      x.dart[static_cast<size_t>(q)] = 4 * c + q;
      occ[pc.key[static_cast<size_t>(q)]].push_back(4 * c + q);
    }
  }
  int max_label = 0;
  for (auto& [k, lab] : p.label) max_label = std::max(max_label, lab);
  int fresh = max_label + 1;
  for (auto& [key, ds] : occ) {
    if (ds.size() != 2)
      fail(ErrorKind::internal, "arc key " + std::to_string(key) + " occupies " +
                                    std::to_string(ds.size()) + " slots");
    d.mate_[static_cast<size_t>(ds[0])] = ds[1];
    d.mate_[static_cast<size_t>(ds[1])] = ds[0];
    auto it = p.label.find(key);
    int lab = it != p.label.end() ? it->second : fresh++;
    d.label_[static_cast<size_t>(ds[0])] = lab;
    d.label_[static_cast<size_t>(ds[1])] = lab;
    bool e0 = d.entry_port(cr_of(ds[0]), port_of(ds[0]));
    bool e1 = d.entry_port(cr_of(ds[1]), port_of(ds[1]));
    if (e0 == e1)
      fail(ErrorKind::internal, "surgery produced an undirected arc");
  }
  d.check_basic();
  return d;
}

Proto spliced_out(const Proto& p, const std::set<int>& dead,
                  const std::function<int(int)>& pairing_xor) {
  UF uf;
  for (int c : dead) {
    const Proto::PC& pc = p.cr[static_cast<size_t>(c)];
    int x = pairing_xor(c);
    for (int q = 0; q < 4; ++q) {
      int q2 = q ^ x;
      if (q < q2)
        uf.unite(pc.key[static_cast<size_t>(q)], pc.key[static_cast<size_t>(q2)]);
    }
  }
  Proto out;
  out.free_loops = p.free_loops;
  out.next_key = p.next_key;
  std::set<int> alive_reps, dead_reps;
  for (size_t c = 0; c < p.cr.size(); ++c) {
    bool is_dead = dead.count(static_cast<int>(c)) > 0;
    for (int q = 0; q < 4; ++q) {
      int rep = uf.find(p.cr[c].key[static_cast<size_t>(q)]);
      (is_dead ? dead_reps : alive_reps).insert(rep);
    }
    if (is_dead) continue;
    Proto::PC pc = p.cr[c];
    for (int q = 0; q < 4; ++q)
      pc.key[static_cast<size_t>(q)] = uf.find(pc.key[static_cast<size_t>(q)]);
    out.cr.push_back(pc);
  }
  for (int rep : dead_reps)
    if (!alive_reps.count(rep)) ++out.free_loops;
  // labels survive only on arcs untouched by the splice
  std::map<int, int> class_size;
  for (auto& [k, par] : uf.parent) ++class_size[uf.find(k)];
  for (auto& [k, lab] : p.label) {
    int rep = uf.find(k);
    if (class_size.count(rep) == 0 || class_size[rep] == 1) out.label[rep] = lab;
  }
  return out;
}

}  // namespace knotdiff
