#pragma once

#include <optional>
#include <vector>

#include "mlk/numeric.hpp"

namespace mlk {

// Dense row-major matrix over Z. Small ranks only; everything exact.
struct IMat {
  int m = 0, n = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int rows, int cols) : m(rows), n(cols), a(size_t(rows) * size_t(cols)) {}

  Int& operator()(int i, int j) { return a[size_t(i) * n + j]; }
  const Int& operator()(int i, int j) const { return a[size_t(i) * n + j]; }

  Vec row(int i) const {
    return Vec(a.begin() + size_t(i) * n, a.begin() + size_t(i + 1) * n);
  }
  void set_row(int i, const Vec& v) {
    for (int j = 0; j < n; ++j) (*this)(i, j) = v[j];
  }

  bool operator==(const IMat&) const = default;
};

struct QMat {
  int m = 0, n = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int rows, int cols) : m(rows), n(cols), a(size_t(rows) * size_t(cols)) {}

  Rat& operator()(int i, int j) { return a[size_t(i) * n + j]; }
  const Rat& operator()(int i, int j) const { return a[size_t(i) * n + j]; }
};

IMat imat_identity(int n);
IMat imat_transpose(const IMat& A);
IMat imat_mul(const IMat& A, const IMat& B);
IMat imat_from_rows(const std::vector<Vec>& rows, int cols);
// Block-diagonal stack of two square matrices.
IMat imat_diag_sum(const IMat& A, const IMat& B);
Vec row_times_mat(const Vec& x, const IMat& A);
Vec mat_times_col(const IMat& A, const Vec& x);

QMat qmat_from(const IMat& A);
QMat qmat_mul(const QMat& A, const QMat& B);

// Signed determinant, fraction-free (Bareiss). A must be square.
Int det_bareiss(IMat A);

// Row-style Hermite normal form: u * input = h with u unimodular, h in
// canonical echelon form (positive pivots, entries above a pivot reduced into
// [0, pivot)). Pivot choice: smallest absolute value, then lowest row index.
struct Hnf {
  IMat h;
  IMat u;
  int rank = 0;
};
Hnf hnf(IMat A);

// Canonical basis (HNF rows) of {x : x * A = 0}. Saturated by construction.
IMat left_kernel(const IMat& A);

// Smith normal form: u * input * v = d, d diagonal with d1 | d2 | ... >= 0.
// vinv is the inverse of v (tracked exactly).
struct Snf {
  IMat d;
  IMat u;
  IMat v;
  IMat vinv;
  int rank = 0;
};
Snf snf(IMat A);

// Inverse over Q; nullopt when singular.
std::optional<QMat> qmat_inverse(const QMat& A);

// X with X * A = B over Q (A: k x n full row rank, B: r x n). nullopt when
// some row of B lies outside the row span of A.
std::optional<QMat> solve_left(const IMat& A, const IMat& B);

// Least common multiple of denominators, then scale: returns integer matrix
// row-equivalent (over Q, row by row) to the input.
IMat clear_denominators_rows(const QMat& A);

}  // namespace mlk
