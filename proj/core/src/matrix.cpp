#include "mlk/matrix.hpp"

#include <algorithm>

namespace mlk {

IMat imat_identity(int n) {
  IMat I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IMat imat_transpose(const IMat& A) {
  IMat T(A.n, A.m);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.n; ++j) T(j, i) = A(i, j);
  return T;
}

IMat imat_mul(const IMat& A, const IMat& B) {
  if (A.n != B.m) throw internal_error("imat_mul: shape mismatch");
  IMat C(A.m, B.n);
  for (int i = 0; i < A.m; ++i)
    for (int k = 0; k < A.n; ++k) {
      const Int& aik = A(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.n; ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

IMat imat_from_rows(const std::vector<Vec>& rows, int cols) {
  IMat A(int(rows.size()), cols);
  for (int i = 0; i < A.m; ++i) {
    if (int(rows[i].size()) != cols)
      throw internal_error("imat_from_rows: ragged input");
    A.set_row(i, rows[i]);
  }
  return A;
}

IMat imat_diag_sum(const IMat& A, const IMat& B) {
  IMat C(A.m + B.m, A.n + B.n);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.n; ++j) C(i, j) = A(i, j);
  for (int i = 0; i < B.m; ++i)
    for (int j = 0; j < B.n; ++j) C(A.m + i, A.n + j) = B(i, j);
  return C;
}

Vec row_times_mat(const Vec& x, const IMat& A) {
  if (int(x.size()) != A.m) throw internal_error("row_times_mat: shape");
  Vec r(A.n, Int(0));
  for (int i = 0; i < A.m; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < A.n; ++j) r[j] += x[i] * A(i, j);
  }
  return r;
}

Vec mat_times_col(const IMat& A, const Vec& x) {
  if (int(x.size()) != A.n) throw internal_error("mat_times_col: shape");
  Vec r(A.m, Int(0));
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.n; ++j) r[i] += A(i, j) * x[j];
  return r;
}

QMat qmat_from(const IMat& A) {
  QMat Q(A.m, A.n);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.n; ++j) Q(i, j) = Rat(A(i, j));
  return Q;
}

QMat qmat_mul(const QMat& A, const QMat& B) {
  if (A.n != B.m) throw internal_error("qmat_mul: shape mismatch");
  QMat C(A.m, B.n);
  for (int i = 0; i < A.m; ++i)
    for (int k = 0; k < A.n; ++k) {
      if (A(i, k) == 0) continue;
      for (int j = 0; j < B.n; ++j) C(i, j) += A(i, k) * B(k, j);
    }
  return C;
}

Int det_bareiss(IMat A) {
  if (A.m != A.n) throw internal_error("det_bareiss: not square");
  const int n = A.m;
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    // deterministic pivot: smallest |entry| among rows >= k, then lowest row
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (A(i, k) == 0) continue;
      if (piv < 0 ||
          mpz_cmpabs(A(i, k).get_mpz_t(), A(piv, k).get_mpz_t()) < 0)
        piv = i;
    }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = A(k, k) * A(i, j) - A(i, k) * A(k, j);
        A(i, j) = divexact(num, prev);
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

namespace {

void row_swap(IMat& A, int i, int j) {
  for (int c = 0; c < A.n; ++c) std::swap(A(i, c), A(j, c));
}

void row_negate(IMat& A, int i) {
  for (int c = 0; c < A.n; ++c) A(i, c) = -A(i, c);
}

// row i += q * row j
void row_axpy(IMat& A, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < A.n; ++c) A(i, c) += q * A(j, c);
}

void col_swap(IMat& A, int i, int j) {
  for (int r = 0; r < A.m; ++r) std::swap(A(r, i), A(r, j));
}

void col_negate(IMat& A, int i) {
  for (int r = 0; r < A.m; ++r) A(r, i) = -A(r, i);
}

// col i += q * col j
void col_axpy(IMat& A, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < A.m; ++r) A(r, i) += q * A(r, j);
}

}  // namespace

Hnf hnf(IMat A) {
  const int m = A.m, n = A.n;
  IMat U = imat_identity(m);
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    // GCD out the column below row r.
    for (;;) {
      int piv = -1;
      for (int i = r; i < m; ++i) {
        if (A(i, col) == 0) continue;
        if (piv < 0 ||
            mpz_cmpabs(A(i, col).get_mpz_t(), A(piv, col).get_mpz_t()) < 0)
          piv = i;
      }
      if (piv < 0) break;
      if (piv != r) {
        row_swap(A, piv, r);
        row_swap(U, piv, r);
      }
      bool leftover = false;
      for (int i = r + 1; i < m; ++i) {
        if (A(i, col) == 0) continue;
        Int q = fdiv_q(A(i, col), A(r, col));
        row_axpy(A, i, r, -q);
        row_axpy(U, i, r, -q);
        if (A(i, col) != 0) leftover = true;
      }
      if (!leftover) break;
    }
    if (A(r, col) == 0) continue;
    if (A(r, col) < 0) {
      row_negate(A, r);
      row_negate(U, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = fdiv_q(A(i, col), A(r, col));
      row_axpy(A, i, r, -q);
      row_axpy(U, i, r, -q);
    }
    ++r;
  }
  return Hnf{std::move(A), std::move(U), r};
}

IMat left_kernel(const IMat& A) {
  Hnf h = hnf(A);
  const int k = A.m - h.rank;
  IMat K(k, A.m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < A.m; ++j) K(i, j) = h.u(h.rank + i, j);
  // canonicalise
  Hnf hk = hnf(std::move(K));
  IMat out(k, A.m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < A.m; ++j) out(i, j) = hk.h(i, j);
  return out;
}

Snf snf(IMat A) {
  const int m = A.m, n = A.n;
  IMat U = imat_identity(m);
  IMat V = imat_identity(n);
  IMat Vinv = imat_identity(n);
  int t = 0;
  const int bound = std::min(m, n);
  while (t < bound) {
    // pivot: smallest |entry| in the trailing block, row-major tie-break
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (A(i, j) == 0) continue;
        if (pi < 0 ||
            mpz_cmpabs(A(i, j).get_mpz_t(), A(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      row_swap(A, pi, t);
      row_swap(U, pi, t);
    }
    if (pj != t) {
      col_swap(A, pj, t);
      col_swap(V, pj, t);
      row_swap(Vinv, pj, t);
    }
    // clear row and column t
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Int q = fdiv_q(A(i, t), A(t, t));
        row_axpy(A, i, t, -q);
        row_axpy(U, i, t, -q);
        if (A(i, t) != 0) {
          // remainder smaller in absolute value: promote it to pivot
          row_swap(A, i, t);
          row_swap(U, i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Int q = fdiv_q(A(t, j), A(t, t));
        col_axpy(A, j, t, -q);
        col_axpy(V, j, t, -q);
        row_axpy(Vinv, t, j, q);
        if (A(t, j) != 0) {
          col_swap(A, j, t);
          col_swap(V, j, t);
          row_swap(Vinv, j, t);
          dirty = true;
        }
      }
    }
    // divisibility fix-up: every trailing entry must be divisible by pivot
    bool restart = false;
    for (int i = t + 1; i < m && !restart; ++i)
      for (int j = t + 1; j < n && !restart; ++j) {
        if (!divides(A(t, t), A(i, j))) {
          row_axpy(A, t, i, Int(1));
          row_axpy(U, t, i, Int(1));
          restart = true;
        }
      }
    if (restart) continue;
    if (A(t, t) < 0) {
      row_negate(A, t);
      row_negate(U, t);
    }
    ++t;
  }
  return Snf{std::move(A), std::move(U), std::move(V), std::move(Vinv), t};
}

std::optional<QMat> qmat_inverse(const QMat& A) {
  if (A.m != A.n) throw internal_error("qmat_inverse: not square");
  const int n = A.m;
  QMat W = A;
  QMat I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (W(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(W(piv, j), W(c, j));
        std::swap(I(piv, j), I(c, j));
      }
    Rat inv = 1 / W(c, c);
    for (int j = 0; j < n; ++j) {
      W(c, j) *= inv;
      I(c, j) *= inv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || W(i, c) == 0) continue;
      Rat f = W(i, c);
      for (int j = 0; j < n; ++j) {
        W(i, j) -= f * W(c, j);
        I(i, j) -= f * I(c, j);
      }
    }
  }
  return I;
}

std::optional<QMat> solve_left(const IMat& A, const IMat& B) {
  if (A.n != B.n) throw internal_error("solve_left: shape mismatch");
  // Row-reduce [A | I] over Q, then express each row of B.
  const int k = A.m, n = A.n;
  QMat W = qmat_from(A);
  QMat T(k, k);
  for (int i = 0; i < k; ++i) T(i, i) = 1;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < k; ++c) {
    int piv = -1;
    for (int i = r; i < k; ++i)
      if (W(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) std::swap(W(piv, j), W(r, j));
    if (piv != r)
      for (int j = 0; j < k; ++j) std::swap(T(piv, j), T(r, j));
    Rat inv = 1 / W(r, c);
    for (int j = 0; j < n; ++j) W(r, j) *= inv;
    for (int j = 0; j < k; ++j) T(r, j) *= inv;
    for (int i = 0; i < k; ++i) {
      if (i == r || W(i, c) == 0) continue;
      Rat f = W(i, c);
      for (int j = 0; j < n; ++j) W(i, j) -= f * W(r, j);
      for (int j = 0; j < k; ++j) T(i, j) -= f * T(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  // Each B row must reduce to a combination of the r echelon rows.
  QMat X(B.m, k);
  for (int bi = 0; bi < B.m; ++bi) {
    QVec rem(n);
    for (int j = 0; j < n; ++j) rem[j] = Rat(B(bi, j));
    QVec coeff(k, Rat(0));
    for (int ri = 0; ri < r; ++ri) {
      Rat f = rem[pivot_col[ri]];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) rem[j] -= f * W(ri, j);
      coeff[ri] = f;
    }
    for (int j = 0; j < n; ++j)
      if (rem[j] != 0) return std::nullopt;
    // X row = coeff * T
    for (int j = 0; j < k; ++j) {
      Rat s = 0;
      for (int ri = 0; ri < r; ++ri) s += coeff[ri] * T(ri, j);
      X(bi, j) = s;
    }
  }
  return X;
}

IMat clear_denominators_rows(const QMat& A) {
  IMat B(A.m, A.n);
  for (int i = 0; i < A.m; ++i) {
    Int l = 1;
    for (int j = 0; j < A.n; ++j) l = lcm(l, A(i, j).get_den());
    for (int j = 0; j < A.n; ++j) {
      Rat s = A(i, j) * Rat(l);
      B(i, j) = s.get_num();
    }
  }
  return B;
}

}  // namespace mlk
