// End-to-end acceptance checks.  Run as: acceptance <cli-binary> <fixture-dir>
// Each criterion prints exactly one PASS/FAIL line; exit status 0 iff all pass.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotdiff/chain.hpp"
#include "knotdiff/group.hpp"
#include "knotdiff/invariants.hpp"
#include "knotdiff/moves.hpp"

using namespace knotdiff;

namespace {

std::string g_cli;
std::string g_fix;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Diagram fixture(const std::string& name) {
  return parse_pd(slurp(g_fix + "/" + name));
}

// ---- independent rational linear algebra (oracle side) --------------------

using RatGrid = std::vector<std::vector<Rat>>;

RatGrid to_grid(const IntMatrix& m) {
  RatGrid g(static_cast<size_t>(m.rows()),
            std::vector<Rat>(static_cast<size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      g[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
  return g;
}

int rank_by_elimination(RatGrid m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(piv)]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(c)] /
              m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int c2 = c; c2 < cols; ++c2)
        m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
            f * m[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
    }
    ++rank;
  }
  return rank;
}

Rat det_by_elimination(RatGrid m) {
  int n = static_cast<int>(m.size());
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
      det = -det;
    }
    det *= m[static_cast<size_t>(c)][static_cast<size_t>(c)];
    for (int r = c + 1; r < n; ++r) {
      Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(c)] /
              m[static_cast<size_t>(c)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int c2 = c; c2 < n; ++c2)
        m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
            f * m[static_cast<size_t>(c)][static_cast<size_t>(c2)];
    }
  }
  return det;
}

// ---- criteria -------------------------------------------------------------

ChainElement random_chain(int degree, std::mt19937& rng) {
  std::vector<Word> words = all_words(degree);
  const char* pool[] = {"K", "L", "M"};
  ChainElement c;
  c.degree = degree;
  int n = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < n; ++t)
    c.terms.add({words[rng() % words.size()].letters(), pool[rng() % 3]},
                static_cast<int>(rng() % 7) - 3);
  return c;
}

bool crit_boundary_squares_to_zero(std::string& note) {
  long checked = 0;
  for (int r = 2; r <= 6; ++r)
    for (const Word& w : all_words(r)) {
      ChainElement c;
      c.degree = r;
      c.terms.add({w.letters(), "K"}, 1);
      if (!boundary(boundary(c)).terms.empty()) {
        note = "d.d != 0 on word " + w.letters();
        return false;
      }
      ++checked;
    }
  std::mt19937 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    ChainElement c = random_chain(2 + static_cast<int>(rng() % 5), rng);
    if (!boundary(boundary(c)).terms.empty()) {
      note = "d.d != 0 on random chain, trial " + std::to_string(trial);
      return false;
    }
    ++checked;
  }
  note = std::to_string(checked) + " chains";
  return true;
}

bool crit_sum_symmetries(std::string& note) {
  const char* files[] = {"trefoil1s.pd", "tref_2s.pd",  "tref_3s.pd",
                         "fig8_2s.pd",   "fig8_3s.pd",  "f51_3s.pd",
                         "f51_3s_b.pd",  "f52_2s.pd",   "f52_3s.pd",
                         "f52_3s_b.pd"};
  int perms_checked = 0, swaps_checked = 0;
  for (const char* f : files) {
    Diagram d = fixture(f);
    int r = d.singular_count();
    FormalSum<ClassLabel> base = alternating_sum(knot_system(d));
    std::vector<int> perm(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<size_t>(i)] = i + 1;
    do {
      FormalSum<ClassLabel> got =
          alternating_sum(knot_system(d.reordered_singulars(perm)));
      if (got != base) {
        note = std::string("reordering changed the sum on ") + f;
        return false;
      }
      ++perms_checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 1; i <= r; ++i) {
      FormalSum<ClassLabel> swapped =
          alternating_sum(knot_system(d.ab_swapped(i)));
      if (swapped != -base) {
        note = std::string("a/b swap did not negate the sum on ") + f;
        return false;
      }
      ++swaps_checked;
    }
  }
  note = std::to_string(perms_checked) + " reorderings, " +
         std::to_string(swaps_checked) + " swaps over 10 diagrams";
  return true;
}

bool crit_vanishing(std::string& note) {
  const char* triple[] = {"tref_3s.pd", "fig8_3s.pd",  "f51_3s.pd",
                          "f51_3s_b.pd", "f52_3s.pd",  "f52_3s_b.pd"};
  auto inv_v2 = [](const Diagram& d) { return Rat(v2(d)); };
  auto inv_j2 = [](const Diagram& d) { return jones_series_coefficient(d, 2); };
  for (const char* f : triple) {
    Diagram d = fixture(f);
    VanishingReport a = vassiliev_vanishing_check(inv_v2, d, 2);
    VanishingReport b = vassiliev_vanishing_check(inv_j2, d, 2);
    if (a.status != VanishStatus::pass || a.value != 0 ||
        b.status != VanishStatus::pass || b.value != 0) {
      note = std::string("order-2 sum nonzero on ") + f;
      return false;
    }
  }
  auto inv_j3 = [](const Diagram& d) { return jones_series_coefficient(d, 3); };
  for (const char* f : {"fig8_4s.pd", "f51_4s.pd"}) {
    Diagram d = fixture(f);
    VanishingReport rep = vassiliev_vanishing_check(inv_j3, d, 3);
    if (rep.status != VanishStatus::pass || rep.value != 0) {
      note = std::string("order-3 sum nonzero on ") + f;
      return false;
    }
  }
  note = "v2 and two series orders on 6+2 diagrams";
  return true;
}

bool crit_nondegenerate(std::string& note) {
  // direct enumeration, no vanishing-checker involvement
  auto signed_v2_sum = [](const Diagram& d) {
    Rat total = 0;
    for (const Word& w : all_words(d.singular_count()))
      total += Rat(w.sign()) * Rat(v2(d.resolved(w)));
    return total;
  };
  Rat t = signed_v2_sum(fixture("tref_2s.pd"));
  Rat f = signed_v2_sum(fixture("fig8_2s.pd"));
  if (t != 1 || f != -1) {
    note = "expected sums 1 and -1";
    return false;
  }
  note = "2-singular sums: trefoil family 1, figure-eight family -1";
  return true;
}

bool crit_oracle_values(std::string& note) {
  Diagram unknot = parse_pd("");
  Diagram tref = fixture("trefoil.pd");
  Diagram f8 = fixture("plain.pd");
  if (v2(unknot) != 0 || v2(tref) != 1 || v2(f8) != -1) {
    note = "v2 mismatch";
    return false;
  }
  if (jones(tref).str() != "-q^-4 + q^-3 + q^-1") {
    note = "jones(trefoil) = " + jones(tref).str();
    return false;
  }
  if (conway(tref).str() != "1 + z^2") {
    note = "conway(trefoil) = " + conway(tref).str();
    return false;
  }
  note = "v2, jones, conway agree with hand computation";
  return true;
}

bool crit_move_invariance(std::string& note) {
  const char* corpus[] = {
      "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]",
      "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]",
      "X[1,6,2,7],X[3,8,4,9],X[5,10,6,1],X[7,2,8,3],X[9,4,10,5]",
      "X[1,4,2,5],X[3,8,4,9],X[5,10,6,1],X[9,6,10,7],X[7,2,8,3]"};
  unsigned seed = 1;
  for (const char* code : corpus) {
    Diagram d = parse_pd(code);
    Laurent base_bracket = kauffman_bracket(d);
    Laurent base_jones = jones(d);
    for (int run = 0; run < 200; ++run) {
      Diagram p = random_moves(d, 4, seed++, false);
      if (kauffman_bracket(p) != base_bracket) {
        note = "bracket changed under writhe-preserving moves";
        return false;
      }
      Diagram q = random_moves(d, 4, seed++, true);
      if (jones(q) != base_jones) {
        note = "jones changed under moves";
        return false;
      }
    }
  }
  for (int i = 0; i < 500; ++i) {
    Diagram d = parse_pd(corpus[i % 4]);
    Diagram p = random_moves(d, 4, 90000 + static_cast<unsigned>(i), true);
    if (fingerprint(p) != fingerprint(d)) {
      note = "fingerprint unstable, perturbation " + std::to_string(i);
      return false;
    }
  }
  note = "800 move sequences + 800 polynomial checks + 500 fingerprints";
  return true;
}

bool crit_smith(std::string& note) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = static_cast<int>(rng() % 19) - 9;
    SmithResult s = smith_normal_form(m);
    if (s.u * m * s.v != s.d) {
      note = "U*M*V != D";
      return false;
    }
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (i != j && s.d.at(i, j) != 0) {
          note = "D not diagonal";
          return false;
        }
        if (i == j && s.d.at(i, j) < 0) {
          note = "negative diagonal entry";
          return false;
        }
      }
    for (int i = 0; i + 1 < s.rank; ++i)
      if (s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0) {
        note = "divisibility chain broken";
        return false;
      }
    if (s.rank != rank_by_elimination(to_grid(m))) {
      note = "rank disagrees with rational elimination";
      return false;
    }
    Rat du = det_by_elimination(to_grid(s.u));
    Rat dv = det_by_elimination(to_grid(s.v));
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) {
      note = "witness determinant not a unit";
      return false;
    }
  }
  note = "200 matrices up to 8x8";
  return true;
}

// brute-force quotient data for one group-product configuration, computed
// straight from the multiplication table on the full ambient basis
struct BruteQuotient {
  int rank_a = 0, rank_b = 0, rank_quotient = 0;
  std::vector<Int> torsion;
};

BruteQuotient brute_quotient(const std::vector<std::vector<int>>& table,
                             int identity,
                             const std::vector<std::pair<int, int>>& factors) {
  int n = static_cast<int>(table.size());
  int r = static_cast<int>(factors.size());
  int words_low = 1 << (r - 1);
  int rows = words_low * n;

  std::vector<std::vector<Int>> cols;
  for (int skip = 0; skip < r; ++skip) {
    std::vector<Int> col(static_cast<size_t>(rows), 0);
    for (int w = 0; w < words_low; ++w) {
      int acc = identity;
      int bit = 0;
      for (int pos = 0; pos < r; ++pos) {
        if (pos == skip) continue;
        bool b = (w >> bit++) & 1;
        acc = table[static_cast<size_t>(acc)][static_cast<size_t>(
            b ? factors[static_cast<size_t>(pos)].second
              : factors[static_cast<size_t>(pos)].first)];
      }
      col[static_cast<size_t>(w * n + acc)] += 1;
    }
    cols.push_back(std::move(col));
  }

  std::vector<Int> bvec(static_cast<size_t>(rows), 0);
  for (int w = 0; w < (1 << r); ++w) {
    int acc = identity;
    for (int pos = 0; pos < r; ++pos)
      acc = table[static_cast<size_t>(acc)][static_cast<size_t>(
          ((w >> pos) & 1) ? factors[static_cast<size_t>(pos)].second
                           : factors[static_cast<size_t>(pos)].first)];
    for (int i = 0; i < r; ++i) {
      int shorter = (w & ((1 << i) - 1)) | ((w >> (i + 1)) << i);
      int letter_sign = ((w >> i) & 1) ? -1 : 1;
      int alt = i % 2 == 0 ? 1 : -1;
      bvec[static_cast<size_t>(shorter * n + acc)] += letter_sign * alt;
    }
  }

  auto rat_rank = [&](const std::vector<std::vector<Int>>& cset) {
    RatGrid g(static_cast<size_t>(rows), std::vector<Rat>(cset.size()));
    for (size_t j = 0; j < cset.size(); ++j)
      for (int i = 0; i < rows; ++i)
        g[static_cast<size_t>(i)][j] = cset[j][static_cast<size_t>(i)];
    return rank_by_elimination(std::move(g));
  };

  BruteQuotient out;
  out.rank_a = rat_rank(cols);
  bool b_nonzero = false;
  for (const Int& v : bvec) b_nonzero = b_nonzero || v != 0;
  out.rank_b = b_nonzero ? 1 : 0;

  // column-echelon basis of the joint lattice by integer column operations
  std::vector<std::vector<Int>> lat = cols;
  lat.push_back(bvec);
  int s = 0;
  std::vector<int> pivot_row;
  for (int row = 0; row < rows && s < static_cast<int>(lat.size()); ++row) {
    while (true) {
      int best = -1;
      Int best_abs = 0;
      int live = 0;
      for (int j = s; j < static_cast<int>(lat.size()); ++j) {
        const Int& v = lat[static_cast<size_t>(j)][static_cast<size_t>(row)];
        if (v == 0) continue;
        ++live;
        Int a = v < 0 ? Int(-v) : v;
        if (best < 0 || a < best_abs) {
          best = j;
          best_abs = a;
        }
      }
      if (live == 0) break;
      if (live == 1) {
        std::swap(lat[static_cast<size_t>(s)], lat[static_cast<size_t>(best)]);
        pivot_row.push_back(row);
        ++s;
        break;
      }
      for (int j = s; j < static_cast<int>(lat.size()); ++j) {
        if (j == best) continue;
        const Int& v = lat[static_cast<size_t>(j)][static_cast<size_t>(row)];
        if (v == 0) continue;
        Int q = v / lat[static_cast<size_t>(best)][static_cast<size_t>(row)];
        if (q != 0)
          for (int i = 0; i < rows; ++i)
            lat[static_cast<size_t>(j)][static_cast<size_t>(i)] -=
                q * lat[static_cast<size_t>(best)][static_cast<size_t>(i)];
      }
    }
  }
  out.rank_quotient = s - out.rank_b;

  // coordinates of the boundary vector in that basis; torsion is their gcd
  if (b_nonzero) {
    std::vector<Int> x = bvec;
    Int g = 0;
    for (int k = 0; k < s; ++k) {
      int pr = pivot_row[static_cast<size_t>(k)];
      const Int& pivot = lat[static_cast<size_t>(k)][static_cast<size_t>(pr)];
      Int c = x[static_cast<size_t>(pr)] / pivot;
      if (c * pivot != x[static_cast<size_t>(pr)])
        throw std::runtime_error("boundary vector left the lattice");
      for (int i = 0; i < rows; ++i)
        x[static_cast<size_t>(i)] -= c * lat[static_cast<size_t>(k)][static_cast<size_t>(i)];
      g = gcd(g, c < 0 ? Int(-c) : c);
    }
    for (const Int& v : x)
      if (v != 0) throw std::runtime_error("boundary vector left the lattice");
    if (g > 1) out.torsion.push_back(g);
  }
  return out;
}

bool crit_group_oracle(std::string& note) {
  long systems = 0;
  for (const Group& g :
       {Group::cyclic(2), Group::cyclic(4), Group::symmetric3()}) {
    int n = g.size();
    long pair_count = static_cast<long>(n) * n;
    for (int r = 1; r <= 3; ++r) {
      long total = 1;
      for (int i = 0; i < r; ++i) total *= pair_count;
      for (long idx = 0; idx < total; ++idx) {
        std::vector<std::pair<int, int>> factors;
        long rest = idx;
        for (int i = 0; i < r; ++i) {
          long p = rest % pair_count;
          rest /= pair_count;
          factors.emplace_back(static_cast<int>(p / n),
                               static_cast<int>(p % n));
        }
        GroupProductSystem full{g, factors};
        std::vector<ChainElement> gens;
        for (int skip = 0; skip < r; ++skip) {
          std::vector<std::pair<int, int>> sub = factors;
          sub.erase(sub.begin() + skip);
          ChainElement e;
          e.degree = r - 1;
          e.terms = weighted_sum(group_system({g, sub}));
          gens.push_back(std::move(e));
        }
        ChainElement higher;
        higher.degree = r;
        higher.terms = weighted_sum(group_system(full));

        QuotientResult pipeline = difference_rank(gens, {higher});
        BruteQuotient brute = brute_quotient(g.table, g.identity, factors);
        if (pipeline.rank_a != brute.rank_a ||
            pipeline.rank_b != brute.rank_b ||
            pipeline.rank_quotient != brute.rank_quotient ||
            pipeline.torsion != brute.torsion) {
          note = g.name + " configuration " + std::to_string(idx) +
                 " (r=" + std::to_string(r) + ") disagrees";
          return false;
        }
        ++systems;
      }
    }
  }
  note = std::to_string(systems) + " configurations across Z/2, Z/4, S_3";
  return true;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool crit_cli_determinism(std::string& note) {
  const std::string common = "--format json --seed 11 ";
  std::vector<std::string> jobs = {
      "resolve --pd '" + g_fix + "/trefoil1s.pd' --word a",
      "sum --pd '" + g_fix + "/tref_3s.pd' --mode alt",
      "sum --pd '" + g_fix + "/tref_2s.pd' --mode weighted",
      "boundary --chain '" + g_fix + "/chain_ab.json'",
      "verify --pd '" + g_fix + "/tref_3s.pd' --order 2 --invariant v2",
      "rank --manifest '" + g_fix + "/rank_manifest.json'",
      "invariant --pd '" + g_fix + "/trefoil.pd'",
  };
  for (const std::string& job : jobs) {
    auto first = run_cli(common + job);
    auto second = run_cli(common + job);
    if (first.first != 0 || second.first != 0) {
      note = "nonzero exit for: " + job;
      return false;
    }
    if (first.second.empty() || first.second != second.second) {
      note = "output differs across runs for: " + job;
      return false;
    }
  }
  note = std::to_string(jobs.size()) + " invocations, two runs each";
  return true;
}

struct Criterion {
  const char* title;
  double budget_seconds;  // 0 = no limit
  bool (*fn)(std::string&);
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli-binary> <fixture-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fix = argv[2];

  const Criterion criteria[] = {
      {"boundary operator squares to zero", 1.0, crit_boundary_squares_to_zero},
      {"resolution sums: permutation-invariant, negated by a/b swap", 10.0,
       crit_sum_symmetries},
      {"low-order invariants vanish on higher-singular sums", 60.0,
       crit_vanishing},
      {"2-singular sums detect v2 (nonzero witness)", 0, crit_nondegenerate},
      {"invariant values match hand-computed oracles", 0, crit_oracle_values},
      {"bracket/jones/fingerprint stable under random moves", 0,
       crit_move_invariance},
      {"Smith normal form postconditions on random matrices", 5.0, crit_smith},
      {"group-product ranks match direct enumeration", 30.0, crit_group_oracle},
      {"CLI JSON byte-identical across repeated runs", 0,
       crit_cli_determinism},
  };

  int passed = 0;
  int index = 0;
  for (const Criterion& crit : criteria) {
    ++index;
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = crit.fn(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
      ok = false;
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && crit.budget_seconds > 0 && elapsed > crit.budget_seconds) {
      ok = false;
      note = "over time budget of " + std::to_string(crit.budget_seconds) +
             " s";
    }
    char line[512];
    std::snprintf(line, sizeof line, "%s  %d/9  %s — %s (%.2f s)",
                  ok ? "PASS" : "FAIL", index, crit.title, note.c_str(),
                  elapsed);
    std::cout << line << std::endl;
    if (ok) ++passed;
  }
  std::cout << "acceptance: " << passed << "/9 passed" << std::endl;
  return passed == 9 ? 0 : 1;
}
