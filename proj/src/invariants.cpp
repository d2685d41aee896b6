#include "knotdiff/invariants.hpp"

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "knotdiff/moves.hpp"

namespace knotdiff {

namespace {

int cr_of(int dart) { return dart >> 2; }
int port_of(int dart) { return dart & 3; }

}  // namespace

Laurent kauffman_bracket(const Diagram& d) {
  if (d.singular_count() > 0)
    fail(ErrorKind::singular_present,
         "bracket is defined on resolved diagrams only");
  int n = d.crossing_count();
  if (n > kBracketCrossingCap)
    fail(ErrorKind::cap_exceeded,
         "state sum over 2^" + std::to_string(n) + " smoothings refused (cap " +
             std::to_string(kBracketCrossingCap) + " crossings)");

  Laurent delta('A');
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  // powers of the loop factor up to every loop count we can meet
  std::vector<Laurent> dpow{Laurent::constant('A', 1)};
  for (int i = 0; i < 2 * n + d.free_loops() + 2; ++i)
    dpow.push_back(dpow.back() * delta);

  if (n == 0) {
    int loops = d.free_loops();
    return loops == 0 ? Laurent::constant('A', 1)
                      : dpow[static_cast<size_t>(loops - 1)];
  }

  int nd = d.dart_count();
  std::vector<int> parent(static_cast<size_t>(nd));
  std::vector<int> root_cache;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  };

  Laurent out('A');
  for (long state = 0; state < (1L << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    for (int u = 0; u < nd; ++u)
      if (u < d.mate(u)) unite(u, d.mate(u));
    int bcount = 0;
    for (int c = 0; c < n; ++c) {
      int x = (state >> c) & 1 ? 3 : 1;  // B smoothing pairs across, A along
      bcount += (state >> c) & 1;
      for (int q = 0; q < 4; ++q)
        if (q < (q ^ x)) unite(4 * c + q, 4 * c + (q ^ x));
    }
    int loops = d.free_loops();
    for (int u = 0; u < nd; ++u)
      if (find(u) == u) ++loops;
    Laurent term = Laurent::monomial('A', n - 2 * bcount);
    out += term * dpow[static_cast<size_t>(loops - 1)];
  }
  return out;
}

Laurent jones(const Diagram& d) {
  if (d.singular_count() > 0)
    fail(ErrorKind::singular_present,
         "jones is defined on resolved diagrams only");
  if (d.components() != 1)
    fail(ErrorKind::multi_component, "jones normalization assumes a knot");
  int w = d.writhe();
  Laurent corr = Laurent::monomial('A', -3 * w, (w % 2 == 0) ? 1 : -1);
  return (corr * kauffman_bracket(d)).root_substituted('q', -4);
}

// --------------------------------------------------------------- conway -----

namespace {

// disjoint sub-diagrams (or a crossing-free loop next to crossings) make the
// whole link split, which kills the Conway polynomial
bool split_apart(const Diagram& d) {
  int n = d.crossing_count();
  if (n == 0) return false;
  if (d.free_loops() > 0) return true;
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x)
      x = parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  for (int u = 0; u < d.dart_count(); ++u) {
    int a = find(cr_of(u)), b = find(cr_of(d.mate(u)));
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
  for (int c = 0; c < n; ++c)
    if (find(c) != find(0)) return true;
  return false;
}

// walk every strand in dart order and report the first crossing whose first
// visit arrives on the under strand; -1 when the diagram is descending
int first_bad_crossing(const Diagram& d) {
  int nd = d.dart_count();
  std::vector<char> vis(static_cast<size_t>(nd), 0);
  std::vector<char> seen(static_cast<size_t>(d.crossing_count()), 0);
  for (int u0 = 0; u0 < nd; ++u0) {
    if (vis[static_cast<size_t>(u0)]) continue;
    if (!d.entry_port(cr_of(u0), port_of(u0))) continue;
    int u = u0;
    do {
      vis[static_cast<size_t>(u)] = 1;
      int c = cr_of(u);
      if (!seen[static_cast<size_t>(c)]) {
        seen[static_cast<size_t>(c)] = 1;
        if ((port_of(u) & 1) == 0) return c;  // entered underneath
      }
      u = d.mate(u ^ 2);
    } while (u != u0);
  }
  return -1;
}

Laurent conway_rec(const Diagram& raw, std::map<std::string, Laurent>& memo,
                   long& budget) {
  Diagram d = simplified(raw);
  if (d.crossing_count() == 0)
    return Laurent::constant('z', d.free_loops() == 1 ? 1 : 0);
  std::string code = d.canonical_code();
  auto it = memo.find(code);
  if (it != memo.end()) return it->second;
  if (--budget < 0)
    fail(ErrorKind::recursion_budget,
         "skein expansion exceeded its node budget");

  Laurent val('z');
  if (!split_apart(d)) {
    int c = first_bad_crossing(d);
    if (c < 0) {
      // descending: an unknot, or a stacked (hence split) link
      val = Laurent::constant('z', d.components() == 1 ? 1 : 0);
    } else {
      int s = d.crossing_sign(c);
      Laurent switched = conway_rec(d.switched(c), memo, budget);
      Laurent smoothed = conway_rec(d.smoothed_oriented(c), memo, budget);
      val = switched + Laurent::monomial('z', 1, s) * smoothed;
    }
  }
  memo.emplace(std::move(code), val);
  return val;
}

}  // namespace

Laurent conway(const Diagram& d) {
  if (d.singular_count() > 0)
    fail(ErrorKind::singular_present,
         "conway is defined on resolved diagrams only");
  std::map<std::string, Laurent> memo;
  long budget = kConwayBudget;
  return conway_rec(d, memo, budget);
}

Int v2(const Diagram& d) {
  if (d.components() != 1)
    fail(ErrorKind::multi_component, "v2 is an invariant of knots");
  Rat c = conway(d).coefficient(2);
  if (boost::multiprecision::denominator(c) != 1)
    fail(ErrorKind::internal, "conway coefficient is not an integer");
  return boost::multiprecision::numerator(c);
}

Rat jones_series_coefficient(const Diagram& d, int n, int max_order) {
  if (n < 0) fail(ErrorKind::index_out_of_range, "series order must be >= 0");
  if (n > max_order)
    fail(ErrorKind::cap_exceeded,
         "series order " + std::to_string(n) + " beyond configured maximum " +
             std::to_string(max_order));
  Laurent j = jones(d);
  Int nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  Rat acc = 0;
  for (const auto& [k, c] : j.terms()) {
    Int kp = 1;
    for (int i = 0; i < n; ++i) kp *= k;
    acc += c * Rat(kp, nfact);
  }
  return acc;
}

KnotClass fingerprint(const Diagram& d) {
  if (d.components() != 1)
    fail(ErrorKind::multi_component, "fingerprints are for knots");
  Diagram s = simplified(d);
  KnotClass k;
  k.jones_poly = jones(s);
  k.conway_poly = conway(s);
  k.min_crossings_seen = s.crossing_count();
  return k;
}

namespace {

struct CatalogEntry {
  KnotClass cls;
  std::string name;
};

// fingerprints of the small named knots, built once at first use; mirrors get
// a _m suffix unless they coincide with the base (figure-eight)
std::vector<CatalogEntry> build_catalog() {
  const std::pair<const char*, const char*> base[] = {
      {"unknot", ""},
      {"trefoil", "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"},
      {"figure8", "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"},
      {"5_1", "X[1,6,2,7],X[3,8,4,9],X[5,10,6,1],X[7,2,8,3],X[9,4,10,5]"},
      {"5_2", "X[1,4,2,5],X[3,8,4,9],X[5,10,6,1],X[9,6,10,7],X[7,2,8,3]"},
  };
  std::vector<CatalogEntry> out;
  auto push = [&](KnotClass k, std::string name) {
    for (const auto& e : out)
      if (e.cls == k) return;
    out.push_back({std::move(k), std::move(name)});
  };
  for (const auto& [name, code] : base) {
    Diagram d = parse_pd(code);
    push(fingerprint(d), name);
    if (d.crossing_count() > 0) {
      Diagram m = d;
      for (int c = 0; c < d.crossing_count(); ++c) m = m.switched(c);
      push(fingerprint(m), std::string(name) + "_m");
    }
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> table = build_catalog();
  return table;
}

}  // namespace

std::string class_label(const KnotClass& k) {
  for (const auto& e : catalog())
    if (e.cls == k) return e.name;
  return "jones=" + k.jones_poly.str() + " conway=" + k.conway_poly.str();
}

VanishingReport vassiliev_vanishing_check(
    const std::function<Rat(const Diagram&)>& inv, const Diagram& singular,
    int order, int cap) {
  int r = singular.singular_count();
  if (order < 0) fail(ErrorKind::index_out_of_range, "order must be >= 0");
  if (order > r)
    fail(ErrorKind::index_out_of_range,
         "order " + std::to_string(order) + " exceeds the " +
             std::to_string(r) + " double points: no signed difference of " +
             "that order exists");
  VanishingReport rep;
  rep.r = r;
  rep.order = order;
  Rat acc = 0;
  for (const Word& w : all_words(r, cap))
    acc += Rat(w.sign()) * inv(singular.resolved(w));
  rep.value = acc;
  rep.status = r >= order + 1
                   ? (acc == 0 ? VanishStatus::pass : VanishStatus::fail)
                   : VanishStatus::info;
  return rep;
}

}  // namespace knotdiff
