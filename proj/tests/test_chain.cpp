#include <functional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "knotdiff/chain.hpp"

using namespace knotdiff;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

ChainElement make_chain(int degree,
                        std::vector<std::tuple<int, std::string, std::string>>
                            terms) {
  ChainElement c;
  c.degree = degree;
  for (auto& [coeff, w, cls] : terms) c.terms.add({w, cls}, coeff);
  check_chain(c);
  return c;
}

ChainElement random_chain(int degree, std::mt19937& rng) {
  std::vector<Word> words = all_words(degree);
  const char* pool[] = {"K", "L", "M"};
  ChainElement c;
  c.degree = degree;
  int n = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < n; ++t) {
    const Word& w = words[rng() % words.size()];
    int coeff = static_cast<int>(rng() % 7) - 3;
    c.terms.add({w.letters(), pool[rng() % 3]}, coeff);
  }
  return c;
}

}  // namespace

TEST_CASE("boundary_letter") {
  auto [w1, s1] = boundary_letter(Word("ab"), 1);
  CHECK(w1.letters() == "b");
  CHECK(s1 == 1);
  auto [w2, s2] = boundary_letter(Word("ab"), 2);
  CHECK(w2.letters() == "a");
  CHECK(s2 == -1);
  auto [w3, s3] = boundary_letter(Word("b"), 1);
  CHECK(w3.letters() == "");
  CHECK(s3 == -1);
  CHECK(kind_of([] { boundary_letter(Word("ab"), 0); }) ==
        ErrorKind::index_out_of_range);
  CHECK(kind_of([] { boundary_letter(Word("ab"), 3); }) ==
        ErrorKind::index_out_of_range);
}

TEST_CASE("boundary on single terms") {
  ChainElement d_ab = boundary(make_chain(2, {{1, "ab", "K"}}));
  CHECK(d_ab.degree == 1);
  CHECK(d_ab.terms == make_chain(1, {{1, "a", "K"}, {1, "b", "K"}}).terms);

  CHECK(boundary(make_chain(1, {{1, "a", "K"}})).terms ==
        make_chain(0, {{1, "", "K"}}).terms);
  CHECK(boundary(make_chain(1, {{1, "b", "K"}})).terms ==
        make_chain(0, {{-1, "", "K"}}).terms);

  CHECK(boundary(d_ab).terms.empty());

  CHECK(kind_of([] { boundary(make_chain(0, {{1, "", "K"}})); }) ==
        ErrorKind::degree_zero);
}

TEST_CASE("chain invariant enforcement") {
  ChainElement bad;
  bad.degree = 2;
  bad.terms.add({"a", "K"}, 1);
  CHECK(kind_of([&] { check_chain(bad); }) == ErrorKind::length_mismatch);
  CHECK(kind_of([&] { boundary(bad); }) == ErrorKind::length_mismatch);
}

TEST_CASE("d compose d is zero") {
  // every basis chain, one class, all degrees that stay enumerable
  for (int r = 2; r <= 6; ++r)
    for (const Word& w : all_words(r)) {
      ChainElement c = make_chain(r, {{1, w.letters(), "K"}});
      CHECK(boundary(boundary(c)).terms.empty());
    }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    ChainElement c = random_chain(2 + static_cast<int>(rng() % 5), rng);
    CHECK(boundary(boundary(c)).terms.empty());
  }
}

TEST_CASE("boundary is additive") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5);
    ChainElement x = random_chain(r, rng);
    ChainElement y = random_chain(r, rng);
    ChainElement sum;
    sum.degree = r;
    sum.terms = x.terms + y.terms;
    CHECK(boundary(sum).terms == boundary(x).terms + boundary(y).terms);
  }
}

TEST_CASE("boundary commutes with class relabeling") {
  auto rename = [](const WordClass& wc) {
    return WordClass{wc.word, wc.cls + "'"};
  };
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    ChainElement c = random_chain(1 + static_cast<int>(rng() % 5), rng);
    ChainElement renamed;
    renamed.degree = c.degree;
    renamed.terms = map_basis(c.terms, rename);
    CHECK(boundary(renamed).terms == map_basis(boundary(c).terms, rename));
  }
}

TEST_CASE("chain_matrix") {
  std::vector<WordClass> basis1 = {{"a", "K"}};
  IntMatrix m1 = chain_matrix({make_chain(1, {{1, "a", "K"}})}, basis1);
  CHECK(m1.rows() == 1);
  CHECK(m1.cols() == 1);
  CHECK(m1.at(0, 0) == 1);

  IntMatrix m0 = chain_matrix({}, basis1);
  CHECK(m0.rows() == 1);
  CHECK(m0.cols() == 0);

  std::vector<WordClass> basis2 = {{"a", "K"}, {"b", "K"}};
  IntMatrix m2 = chain_matrix({make_chain(1, {{1, "a", "K"}, {1, "b", "K"}}),
                               make_chain(1, {{1, "a", "K"}, {-1, "b", "K"}})},
                              basis2);
  CHECK(m2.rows() == 2);
  CHECK(m2.cols() == 2);
  CHECK(m2.at(0, 0) == 1);
  CHECK(m2.at(0, 1) == 1);
  CHECK(m2.at(1, 0) == 1);
  CHECK(m2.at(1, 1) == -1);

  CHECK(kind_of([&] {
          chain_matrix({make_chain(1, {{1, "b", "L"}})}, basis1);
        }) == ErrorKind::basis_incomplete);
  CHECK(kind_of([&] {
          chain_matrix({make_chain(1, {{1, "a", "K"}}),
                        make_chain(2, {{1, "ab", "K"}})},
                       basis1);
        }) == ErrorKind::mixed_degree);
}

TEST_CASE("difference_rank") {
  ChainElement x = make_chain(1, {{1, "a", "K"}, {-1, "a", "L"}});

  QuotientResult free_case = difference_rank({x}, {});
  CHECK(free_case.rank_a == 1);
  CHECK(free_case.rank_b == 0);
  CHECK(free_case.rank_quotient == 1);
  CHECK(free_case.torsion.empty());

  // boundary of (ab, K) - (ab, L) is exactly x + x, per-class cancellation
  ChainElement ab = make_chain(2, {{1, "ab", "K"}, {-1, "ab", "L"}});
  ChainElement half = make_chain(1, {{1, "a", "K"}, {1, "b", "K"},
                                     {-1, "a", "L"}, {-1, "b", "L"}});
  CHECK(boundary(ab).terms == half.terms);
  QuotientResult killed = difference_rank({half}, {ab});
  CHECK(killed.rank_quotient == 0);
  CHECK(killed.torsion.empty());

  QuotientResult tors = difference_rank(
      {half}, {make_chain(2, {{2, "ab", "K"}, {-2, "ab", "L"}})});
  CHECK(tors.rank_a == 1);
  CHECK(tors.rank_b == 1);
  CHECK(tors.rank_quotient == 0);
  REQUIRE(tors.torsion.size() == 1);
  CHECK(tors.torsion[0] == 2);

  QuotientResult empty = difference_rank({}, {});
  CHECK(empty.rows == 0);
  CHECK(empty.rank_quotient == 0);

  CHECK(kind_of([&] { difference_rank({x, ab}, {}); }) ==
        ErrorKind::mixed_degree);
  CHECK(kind_of([&] { difference_rank({x}, {x}); }) ==
        ErrorKind::mixed_degree);
}

TEST_CASE("vassiliev_quotient_rank") {
  QuotientResult lone = vassiliev_quotient_rank({"unknot"}, {});
  CHECK(lone.rank_a == 1);
  CHECK(lone.rank_quotient == 1);
  CHECK(lone.torsion.empty());

  FormalSum<ClassLabel> rel;
  rel.add("trefoil", 1);
  rel.add("unknot", -1);
  QuotientResult two = vassiliev_quotient_rank({"unknot", "trefoil"}, {rel});
  CHECK(two.rank_a == 2);
  CHECK(two.rank_b == 1);
  CHECK(two.rank_quotient == 1);
  CHECK(two.torsion.empty());

  QuotientResult dup =
      vassiliev_quotient_rank({"unknot", "trefoil"}, {rel, rel, rel});
  CHECK(dup.rank_quotient == two.rank_quotient);
  CHECK(dup.torsion == two.torsion);

  FormalSum<ClassLabel> twice;
  twice.add("trefoil", 2);
  twice.add("unknot", -2);
  QuotientResult tors = vassiliev_quotient_rank({"unknot", "trefoil"}, {twice});
  CHECK(tors.rank_quotient == 1);
  REQUIRE(tors.torsion.size() == 1);
  CHECK(tors.torsion[0] == 2);
}
