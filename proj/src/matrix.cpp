#include "knotdiff/matrix.hpp"

#include <cstdlib>

namespace knotdiff {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int& IntMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    fail(ErrorKind::internal, "matrix index out of range");
  return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
               static_cast<size_t>(j)];
}

const Int& IntMatrix::at(int i, int j) const {
  return const_cast<IntMatrix*>(this)->at(i, j);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::internal, "matrix product shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(int src, int dst, const Int& k) {
  for (int j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::add_col(int src, int dst, const Int& k) {
  for (int i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntMatrix::scale_row(int i, const Int& k) {
  for (int j = 0; j < cols_; ++j) at(i, j) *= k;
}

void IntMatrix::scale_col(int j, const Int& k) {
  for (int i = 0; i < rows_; ++i) at(i, j) *= k;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r;
  r.d = m;
  r.u = IntMatrix::identity(m.rows());
  r.v = IntMatrix::identity(m.cols());
  IntMatrix& a = r.d;
  const int R = m.rows(), C = m.cols();
  int t = 0;
  while (t < R && t < C) {
    // smallest-magnitude nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j) {
        if (a.at(i, j) == 0) continue;
        Int mag = abs(a.at(i, j));
        if (pi == -1 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;
    a.swap_rows(t, pi);
    r.u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    r.v.swap_cols(t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (int i = 0; i < R; ++i) {
        if (i == t || a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);  // truncating: remainder shrinks
        if (q != 0) {
          a.add_row(t, i, -q);
          r.u.add_row(t, i, -q);
        }
        if (a.at(i, t) != 0) {
          a.swap_rows(t, i);
          r.u.swap_rows(t, i);
          again = true;
        }
      }
      if (again) continue;
      for (int j = 0; j < C; ++j) {
        if (j == t || a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        if (q != 0) {
          a.add_col(t, j, -q);
          r.v.add_col(t, j, -q);
        }
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          r.v.swap_cols(t, j);
          again = true;
        }
      }
    }

    // pivot must divide every remaining entry; if not, fold that row in
    bool fixed = false;
    for (int i = t + 1; i < R && !fixed; ++i)
      for (int j = t + 1; j < C && !fixed; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          a.add_row(i, t, 1);
          r.u.add_row(i, t, 1);
          fixed = true;
        }
    if (fixed) continue;  // redo this pivot position

    if (a.at(t, t) < 0) {
      a.scale_row(t, Int(-1));
      r.u.scale_row(t, Int(-1));
    }
    ++t;
  }
  for (int i = 0; i < t; ++i) {
    r.invariant_factors.push_back(a.at(i, i));
  }
  r.rank = t;
  return r;
}

int bareiss_rank(const IntMatrix& m) {
  IntMatrix a = m;
  const int R = a.rows(), C = a.cols();
  Int prev = 1;
  int k = 0;
  while (k < R && k < C) {
    int pi = -1, pj = -1;
    for (int i = k; i < R && pi == -1; ++i)
      for (int j = k; j < C && pi == -1; ++j)
        if (a.at(i, j) != 0) {
          pi = i;
          pj = j;
        }
    if (pi == -1) break;
    a.swap_rows(k, pi);
    a.swap_cols(k, pj);
    for (int i = k + 1; i < R; ++i)
      for (int j = k + 1; j < C; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
    ++k;
  }
  return k;
}

QuotientResult lattice_quotient(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    fail(ErrorKind::internal, "lattice generators live in different ambients");
  QuotientResult q;
  q.rows = a.rows();
  q.rank_a = smith_normal_form(a).rank;

  const int m = a.rows();
  IntMatrix ab(m, a.cols() + b.cols());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < a.cols(); ++j) ab.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) ab.at(i, a.cols() + j) = b.at(i, j);
  }
  SmithResult joint = smith_normal_form(ab);
  const int rank_l = joint.rank;

  // b's columns in coordinates of the joint lattice basis
  IntMatrix bl(rank_l, b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < m; ++i) {
      Int w = 0;
      for (int k = 0; k < m; ++k) w += joint.u.at(i, k) * b.at(k, j);
      if (i < rank_l) {
        const Int& d = joint.d.at(i, i);
        if (w % d != 0)
          fail(ErrorKind::internal, "sublattice column escapes the joint lattice");
        bl.at(i, j) = w / d;
      } else if (w != 0) {
        fail(ErrorKind::internal, "sublattice column escapes the joint lattice");
      }
    }
  }
  SmithResult sub = smith_normal_form(bl);
  q.rank_b = sub.rank;
  q.rank_quotient = rank_l - sub.rank;
  for (const Int& f : sub.invariant_factors)
    if (f > 1) q.torsion.push_back(f);
  return q;
}

}  // namespace knotdiff
