#include "mlk/lattice.hpp"

#include <algorithm>
#include <functional>

namespace mlk {

IntLattice IntLattice::from_gram(IMat g) {
  if (g.m != g.n) throw malformed_input("gram matrix must be square");
  for (int i = 0; i < g.m; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g(i, j) != g(j, i)) throw malformed_input("gram matrix must be symmetric");
  IntLattice L;
  L.nondegenerate = (g.m == 0) || (det_bareiss(g) != 0);
  L.gram = std::move(g);
  return L;
}

IntLattice lattice_U() {
  IMat g(2, 2);
  g(0, 1) = -1;
  g(1, 0) = -1;
  return IntLattice::from_gram(std::move(g));
}

IntLattice lattice_E8neg() {
  // Negated E8 Cartan matrix; chain 0-1-2-3-4-5-6 with node 7 attached to 4.
  IMat g(8, 8);
  auto edge = [&](int i, int j) {
    g(i, j) = 1;
    g(j, i) = 1;
  };
  for (int i = 0; i < 8; ++i) g(i, i) = -2;
  for (int i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return IntLattice::from_gram(std::move(g));
}

IntLattice lattice_K3() {
  IntLattice L = lattice_U();
  L = direct_sum(L, lattice_U());
  L = direct_sum(L, lattice_U());
  L = direct_sum(L, lattice_E8neg());
  L = direct_sum(L, lattice_E8neg());
  return L;
}

IntLattice lattice_K3n(int n) {
  if (n < 2) throw precondition_error("K3n lattice requires n >= 2");
  return direct_sum(lattice_K3(), lattice_diag({Int(-(2 * n - 2))}));
}

IntLattice lattice_diag(const std::vector<Int>& entries) {
  IMat g(int(entries.size()), int(entries.size()));
  for (int i = 0; i < g.m; ++i) g(i, i) = entries[i];
  return IntLattice::from_gram(std::move(g));
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
  return IntLattice::from_gram(imat_diag_sum(a.gram, b.gram));
}

Int pair(const IntLattice& L, const Vec& v, const Vec& w) {
  if (int(v.size()) != L.rank() || int(w.size()) != L.rank())
    throw precondition_error("pair: dimension mismatch");
  Int s = 0;
  for (int i = 0; i < L.rank(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < L.rank(); ++j) s += v[i] * L.gram(i, j) * w[j];
  }
  return s;
}

Int square(const IntLattice& L, const Vec& v) { return pair(L, v, v); }

Int divisibility(const IntLattice& L, const Vec& v) {
  if (is_zero_vec(v)) throw precondition_error("divisibility: zero vector");
  Vec row = row_times_mat(v, L.gram);
  Int d = content(row);
  if (d == 0)
    throw precondition_error("divisibility: vector pairs to zero (degenerate lattice)");
  return d;
}

Int discriminant(const IntLattice& L) { return iabs(det_bareiss(L.gram)); }

bool is_primitive(const IntLattice& L, const Vec& v) {
  if (int(v.size()) != L.rank())
    throw precondition_error("is_primitive: dimension mismatch");
  if (is_zero_vec(v)) throw precondition_error("is_primitive: zero vector");
  return content(v) == 1;
}

IMat Sublattice::restricted_gram() const {
  return imat_mul(imat_mul(basis, ambient.gram), imat_transpose(basis));
}

IntLattice Sublattice::restricted_lattice() const {
  return IntLattice::from_gram(restricted_gram());
}

Vec Sublattice::to_ambient(const Vec& coords) const {
  return row_times_mat(coords, basis);
}

Sublattice sublattice_span(const IntLattice& L, const IMat& rows) {
  if (rows.n != L.rank())
    throw precondition_error("sublattice_span: width differs from ambient rank");
  if (hnf(rows).rank != rows.m)
    throw precondition_error("sublattice_span: rows are linearly dependent");
  return Sublattice{L, rows, false};
}

Sublattice sublattice_span(const IntLattice& L, const std::vector<Vec>& rows) {
  return sublattice_span(L, imat_from_rows(rows, L.rank()));
}

Sublattice orthogonal_complement(const IntLattice& L, const Sublattice& S) {
  IMat M = imat_mul(L.gram, imat_transpose(S.basis));  // rank x k
  IMat K = left_kernel(M);
  return Sublattice{L, std::move(K), true};
}

Sublattice orthogonal_complement(const IntLattice& L,
                                 const std::vector<Vec>& span_rows) {
  IMat rows = imat_from_rows(span_rows, L.rank());
  IMat M = imat_mul(L.gram, imat_transpose(rows));
  IMat K = left_kernel(M);
  return Sublattice{L, std::move(K), true};
}

Sublattice saturation(const IntLattice& L, const Sublattice& S) {
  IMat C = left_kernel(imat_transpose(S.basis));
  IMat sat = left_kernel(imat_transpose(C));
  return Sublattice{L, std::move(sat), true};
}

std::optional<Int> sublattice_index(const Sublattice& A, const Sublattice& B) {
  if (A.ambient.gram != B.ambient.gram)
    throw precondition_error("sublattice_index: different ambient lattices");
  auto X = solve_left(A.basis, B.basis);
  if (!X) throw precondition_error("sublattice_index: B not in rational span of A");
  for (const Rat& x : X->a)
    if (!rat_is_integer(x))
      throw precondition_error("sublattice_index: B not contained in A");
  if (B.rank() < A.rank()) return std::nullopt;
  IMat Xi(X->m, X->n);
  for (int i = 0; i < X->m; ++i)
    for (int j = 0; j < X->n; ++j) Xi(i, j) = (*X)(i, j).get_num();
  Snf s = snf(std::move(Xi));
  Int idx = 1;
  for (int i = 0; i < std::min(s.d.m, s.d.n); ++i) idx *= s.d(i, i);
  if (idx == 0)
    throw internal_error("sublattice_index: dependent rows in equal-rank case");
  return iabs(idx);
}

std::optional<Vec> sublattice_coords(const Sublattice& S, const Vec& v) {
  IMat bmat(1, int(v.size()));
  bmat.set_row(0, v);
  auto X = solve_left(S.basis, bmat);
  if (!X) return std::nullopt;
  Vec out(S.rank());
  for (int j = 0; j < S.rank(); ++j) {
    if (!rat_is_integer((*X)(0, j))) return std::nullopt;
    out[j] = (*X)(0, j).get_num();
  }
  return out;
}

namespace {

// Strictly definite lattices have no nonzero isotropic vectors: detect via
// leading principal minors (Sylvester) so searches can bail out immediately.
bool is_definite(const IntLattice& L) {
  const int n = L.rank();
  if (n == 0) return true;
  bool pos = true, neg = true;
  for (int k = 1; k <= n && (pos || neg); ++k) {
    IMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = L.gram(i, j);
    Int d = det_bareiss(std::move(sub));
    if (d == 0) return false;
    if (d < 0) pos = false;
    if ((k % 2 == 1 && d > 0) || (k % 2 == 0 && d < 0)) neg = false;
  }
  return pos || neg;
}

}  // namespace

bool scan_shells(int rank, int sup_norm_bound,
                 const std::function<bool(const Vec&)>& visit) {
  if (rank == 0) return false;
  // digit sequence for shell s: 1, -1, 2, -2, ..., s, -s
  for (int s = 1; s <= sup_norm_bound; ++s) {
    const int ndig = 2 * s;
    auto digit = [&](int idx) -> long {
      long mag = idx / 2 + 1;
      return (idx % 2 == 0) ? mag : -mag;
    };
    std::vector<int> support(rank);
    for (int t = 1; t <= rank; ++t) {
      // lexicographic t-subsets of [0, rank)
      for (int i = 0; i < t; ++i) support[i] = i;
      for (;;) {
        // odometer over digit indices, position 0 fastest
        std::vector<int> d(t, 0);
        for (;;) {
          bool has_max = false;
          for (int i = 0; i < t; ++i)
            if (d[i] / 2 + 1 == s) {
              has_max = true;
              break;
            }
          if (has_max) {
            Vec v(rank, Int(0));
            for (int i = 0; i < t; ++i) v[support[i]] = digit(d[i]);
            if (visit(v)) return true;
          }
          int pos = 0;
          while (pos < t && d[pos] == ndig - 1) {
            d[pos] = 0;
            ++pos;
          }
          if (pos == t) break;
          ++d[pos];
        }
        // next subset
        int i = t - 1;
        while (i >= 0 && support[i] == rank - t + i) --i;
        if (i < 0) break;
        ++support[i];
        for (int j = i + 1; j < t; ++j) support[j] = support[j - 1] + 1;
      }
    }
  }
  return false;
}

std::optional<Vec> find_isotropic(const IntLattice& L, int sup_norm_bound) {
  if (L.rank() == 0) return std::nullopt;
  if (is_definite(L)) return std::nullopt;
  std::optional<Vec> found;
  scan_shells(L.rank(), sup_norm_bound, [&](const Vec& v) {
    if (square(L, v) != 0) return false;
    if (content(v) != 1) return false;
    found = v;
    return true;
  });
  return found;
}

std::optional<Vec> find_isotropic_escalating(const IntLattice& L,
                                             const IsotropicSearch& opts) {
  if (L.rank() == 0) return std::nullopt;
  if (is_definite(L)) return std::nullopt;
  // Shells are scanned in increasing order, so a single pass up to the cap
  // visits exactly what repeated doubling would.
  return find_isotropic(L, opts.bound_cap);
}

}  // namespace mlk
