#pragma once

#include <vector>

#include "knotdiff/errors.hpp"
#include "knotdiff/rational.hpp"

namespace knotdiff {

// Dense exact integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
      fail(ErrorKind::internal, "negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
  }
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j);
  const Int& at(int i, int j) const;

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void add_row(int src, int dst, const Int& k);  // row dst += k * row src
  void add_col(int src, int dst, const Int& k);
  void scale_row(int i, const Int& k);
  void scale_col(int j, const Int& k);

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SmithResult {
  IntMatrix d;                        // diagonal, d_i | d_{i+1}, entries >= 0
  IntMatrix u, v;                     // unimodular witnesses: u * m * v = d
  int rank = 0;                       // count of nonzero diagonal entries
  std::vector<Int> invariant_factors; // the nonzero d_i in order
};

SmithResult smith_normal_form(const IntMatrix& m);

// Rank by fraction-free (Bareiss) elimination; independent of the SNF path.
int bareiss_rank(const IntMatrix& m);

// Torsion and rank data for the quotient L/B where L is the lattice spanned
// by the columns of [a|b] and B the sublattice spanned by the columns of b.
struct QuotientResult {
  int rows = 0;                       // ambient dimension (shared row count)
  int rank_a = 0;
  int rank_b = 0;
  int rank_quotient = 0;              // rank(L) - rank(B)
  std::vector<Int> torsion;           // invariant factors > 1 of L/B
};

QuotientResult lattice_quotient(const IntMatrix& a, const IntMatrix& b);

}  // namespace knotdiff
