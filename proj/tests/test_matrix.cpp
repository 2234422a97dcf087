#include <doctest.h>

#include "mlk/matrix.hpp"
#include "mlk/rng.hpp"

using namespace mlk;

namespace {

IMat random_mat(Rng& rng, int m, int n, long lo = -9, long hi = 9) {
  IMat A(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = Int(rng.range(lo, hi));
  return A;
}

bool is_unimodular(const IMat& U) {
  Int d = det_bareiss(U);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("hnf reproduces the row space and canonical form") {
  Rng rng(0x11u);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + int(rng.below(5));
    int n = 1 + int(rng.below(6));
    IMat A = random_mat(rng, m, n);
    Hnf h = hnf(A);
    CHECK(is_unimodular(h.u));
    CHECK(imat_mul(h.u, A) == h.h);
    // echelon shape with positive pivots and reduced entries above
    int last_pivot = -1;
    for (int i = 0; i < h.rank; ++i) {
      int p = 0;
      while (p < n && h.h(i, p) == 0) ++p;
      CHECK(p < n);
      CHECK(p > last_pivot);
      last_pivot = p;
      CHECK(h.h(i, p) > 0);
      for (int r = 0; r < i; ++r) {
        CHECK(h.h(r, p) >= 0);
        CHECK(h.h(r, p) < h.h(i, p));
      }
    }
    for (int i = h.rank; i < m; ++i)
      for (int j = 0; j < n; ++j) CHECK(h.h(i, j) == 0);
  }
}

TEST_CASE("left kernel annihilates and has full complement rank") {
  Rng rng(0x22u);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + int(rng.below(6));
    int n = 1 + int(rng.below(4));
    IMat A = random_mat(rng, m, n, -4, 4);
    IMat K = left_kernel(A);
    CHECK(K.m == m - hnf(A).rank);
    for (int i = 0; i < K.m; ++i) {
      Vec prod = row_times_mat(K.row(i), A);
      CHECK(is_zero_vec(prod));
    }
  }
}

TEST_CASE("smith normal form divisibility chain and transforms") {
  Rng rng(0x33u);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + int(rng.below(5));
    int n = 1 + int(rng.below(5));
    IMat A = random_mat(rng, m, n, -7, 7);
    Snf s = snf(A);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(imat_mul(s.v, s.vinv) == imat_identity(n));
    CHECK(imat_mul(imat_mul(s.u, A), s.v) == s.d);
    for (int i = 0; i < std::min(m, n); ++i) {
      CHECK(s.d(i, i) >= 0);
      if (i + 1 < std::min(m, n) && s.d(i + 1, i + 1) != 0)
        CHECK(divides(s.d(i, i), s.d(i + 1, i + 1)));
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
  }
}

TEST_CASE("bareiss determinant matches cofactor expansion on small matrices") {
  // independent oracle: recursive cofactor expansion
  std::function<Int(const IMat&)> cof = [&](const IMat& A) -> Int {
    if (A.m == 1) return A(0, 0);
    Int total = 0;
    for (int j = 0; j < A.n; ++j) {
      if (A(0, j) == 0) continue;
      IMat sub(A.m - 1, A.n - 1);
      for (int r = 1; r < A.m; ++r) {
        int cc = 0;
        for (int c = 0; c < A.n; ++c) {
          if (c == j) continue;
          sub(r - 1, cc++) = A(r, c);
        }
      }
      Int term = A(0, j) * cof(sub);
      total += (j % 2 == 0) ? term : -term;
    }
    return total;
  };
  Rng rng(0x44u);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + int(rng.below(5));
    IMat A = random_mat(rng, n, n, -6, 6);
    CHECK(det_bareiss(A) == cof(A));
  }
}

TEST_CASE("solve_left expresses rows exactly or reports failure") {
  Rng rng(0x55u);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 1 + int(rng.below(3));
    int n = k + int(rng.below(3));
    IMat A = random_mat(rng, k, n, -5, 5);
    if (hnf(A).rank != k) continue;
    // B = X * A for a random integer X must be recovered exactly
    IMat X = random_mat(rng, 2, k, -4, 4);
    IMat B = imat_mul(X, A);
    auto sol = solve_left(A, B);
    REQUIRE(sol.has_value());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < k; ++j) CHECK((*sol)(i, j) == Rat(X(i, j)));
  }
  // a row outside the span is rejected
  IMat A(1, 2);
  A(0, 0) = 1;
  IMat B(1, 2);
  B(0, 1) = 1;
  CHECK(!solve_left(A, B).has_value());
}
