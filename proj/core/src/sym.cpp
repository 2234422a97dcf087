#include "mlk/sym.hpp"

#include <algorithm>
#include <cstdlib>

#include "mlk/constructions.hpp"

namespace mlk {

long default_size_cap() {
  if (const char* env = std::getenv("MLK_SIZE_CAP")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 5000;
}

namespace {

Int binom_count(int rank, int n) {
  return binom(static_cast<unsigned long>(rank + n - 1),
               static_cast<unsigned long>(n));
}

// Permanent by Ryser's formula with Gray-code column subsets.
Int permanent(const IMat& M) {
  const int n = M.m;
  if (n == 0) return 1;
  std::vector<Int> sums(n, Int(0));
  Int total = 0;
  Int prod;
  unsigned prev = 0;
  for (unsigned k = 1; k < (1u << n); ++k) {
    unsigned gray = k ^ (k >> 1);
    unsigned diff = gray ^ prev;
    int col = __builtin_ctz(diff);
    if (gray & diff)
      for (int i = 0; i < n; ++i) sums[i] += M(i, col);
    else
      for (int i = 0; i < n; ++i) sums[i] -= M(i, col);
    prev = gray;
    prod = 1;
    for (int i = 0; i < n; ++i) prod *= sums[i];
    if ((n - __builtin_popcount(gray)) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

}  // namespace

int SymLattice::monomial_index(const std::vector<int>& mono) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), mono);
  if (it == monomials.end() || *it != mono)
    throw internal_error("monomial_index: unknown monomial");
  return int(it - monomials.begin());
}

Int SymLattice::pair_monomials(int i, int j) const {
  if (n == 0) return 1;
  const uint64_t key =
      uint64_t(std::min(i, j)) * uint64_t(dim()) + uint64_t(std::max(i, j));
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->perms.find(key);
    if (it != cache_->perms.end()) return it->second;
  }
  const std::vector<int>& a = monomials[size_t(std::min(i, j))];
  const std::vector<int>& b = monomials[size_t(std::max(i, j))];
  IMat M(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) M(r, c) = base.gram(a[r], b[c]);
  Int val = permanent(M);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->perms.emplace(key, std::move(val)).first->second;
}

SymLattice sym_lattice(const IntLattice& base, int n, long size_cap) {
  if (n < 0 || n > 6)
    throw precondition_error("sym_lattice: n must be between 0 and 6");
  Int count = n == 0 ? Int(1) : binom_count(base.rank(), n);
  if (count > size_cap)
    throw precondition_error("sym_lattice: monomial count " + count.get_str() +
                             " exceeds size cap " + std::to_string(size_cap));
  SymLattice S;
  S.base = base;
  S.n = n;
  S.cache_ = std::make_shared<SymLattice::Cache>();
  if (n == 0) {
    S.monomials.push_back({});
    return S;
  }
  std::vector<int> mono(n, 0);
  for (;;) {
    S.monomials.push_back(mono);
    int i = n - 1;
    while (i >= 0 && mono[i] == base.rank() - 1) --i;
    if (i < 0) break;
    ++mono[i];
    for (int j = i + 1; j < n; ++j) mono[j] = mono[i];
  }
  return S;
}

bool sym_is_integral(const SymVector& v) {
  for (const Rat& c : v.coords)
    if (!rat_is_integer(c)) return false;
  return true;
}

SymVector sym_zero(const SymLattice& S) {
  return SymVector{QVec(size_t(S.dim()), Rat(0))};
}

SymVector sym_scale(const SymVector& v, const Rat& c) {
  SymVector out = v;
  for (Rat& x : out.coords) x *= c;
  return out;
}

void sym_add_scaled(SymVector& acc, const SymVector& v, const Rat& c) {
  for (size_t i = 0; i < acc.coords.size(); ++i) acc.coords[i] += c * v.coords[i];
}

SymVector sym_power_vec(const SymLattice& S, const Vec& v) {
  if (int(v.size()) != S.base.rank())
    throw precondition_error("sym_power_vec: dimension mismatch");
  SymVector out = sym_zero(S);
  const Int nfact = factorial(static_cast<unsigned long>(S.n));
  for (int mi = 0; mi < S.dim(); ++mi) {
    const std::vector<int>& mono = S.monomials[size_t(mi)];
    Int coeff = nfact;
    Int prod = 1;
    int run = 1;
    bool zero = false;
    for (size_t t = 0; t < mono.size(); ++t) {
      if (v[size_t(mono[t])] == 0) {
        zero = true;
        break;
      }
      prod *= v[size_t(mono[t])];
      if (t > 0 && mono[t] == mono[t - 1]) {
        ++run;
        coeff = divexact(coeff, Int(run));
      } else {
        run = 1;
      }
    }
    if (zero) continue;
    out.coords[size_t(mi)] = Rat(coeff * prod);
  }
  return out;
}

SymVector sym_linear(const SymLattice& S1, const QVec& v) {
  if (S1.n != 1) throw internal_error("sym_linear: level must be 1");
  SymVector out = sym_zero(S1);
  for (size_t i = 0; i < v.size(); ++i) out.coords[i] = v[i];
  return out;
}

Rat q_n(const SymLattice& S, const SymVector& u, const SymVector& v) {
  if (int(u.coords.size()) != S.dim() || int(v.coords.size()) != S.dim())
    throw precondition_error("q_n: dimension mismatch");
  Rat total = 0;
  for (int i = 0; i < S.dim(); ++i) {
    if (u.coords[size_t(i)] == 0) continue;
    for (int j = 0; j < S.dim(); ++j) {
      if (v.coords[size_t(j)] == 0) continue;
      total += u.coords[size_t(i)] * v.coords[size_t(j)] *
               Rat(S.pair_monomials(i, j));
    }
  }
  return total;
}

SymTower sym_tower(const IntLattice& base, int n, long size_cap) {
  SymTower T;
  T.base = base;
  for (int k = 0; k <= n; ++k) T.level.push_back(sym_lattice(base, k, size_cap));
  return T;
}

SymVector sym_mul(const SymTower& T, int na, const SymVector& a, int nb,
                  const SymVector& b) {
  const SymLattice& Sa = T.at(na);
  const SymLattice& Sb = T.at(nb);
  const SymLattice& Sc = T.at(na + nb);
  SymVector out = sym_zero(Sc);
  std::vector<int> merged;
  merged.reserve(size_t(na + nb));
  for (int i = 0; i < Sa.dim(); ++i) {
    if (a.coords[size_t(i)] == 0) continue;
    for (int j = 0; j < Sb.dim(); ++j) {
      if (b.coords[size_t(j)] == 0) continue;
      merged.clear();
      std::merge(Sa.monomials[size_t(i)].begin(), Sa.monomials[size_t(i)].end(),
                 Sb.monomials[size_t(j)].begin(), Sb.monomials[size_t(j)].end(),
                 std::back_inserter(merged));
      out.coords[size_t(Sc.monomial_index(merged))] +=
          a.coords[size_t(i)] * b.coords[size_t(j)];
    }
  }
  return out;
}

Rat rank_n(const SymLattice& S, int f_index, const SymVector& v) {
  std::vector<Int> w(size_t(S.base.rank()));
  for (int i = 0; i < S.base.rank(); ++i) w[size_t(i)] = -S.base.gram(i, f_index);
  Rat total = 0;
  for (int mi = 0; mi < S.dim(); ++mi) {
    if (v.coords[size_t(mi)] == 0) continue;
    Int prod = 1;
    for (int idx : S.monomials[size_t(mi)]) {
      prod *= w[size_t(idx)];
      if (prod == 0) break;
    }
    if (prod != 0) total += v.coords[size_t(mi)] * Rat(prod);
  }
  return total;
}

SymVector qT_class(const SymTower& T2, const IntLattice& T) {
  if (!T.nondegenerate) throw precondition_error("qT_class: degenerate lattice");
  auto inv = qmat_inverse(qmat_from(T.gram));
  if (!inv) throw precondition_error("qT_class: degenerate lattice");
  const SymLattice& S2 = T2.at(2);
  SymVector out = sym_zero(S2);
  for (int i = 0; i < T.rank(); ++i)
    for (int j = i; j < T.rank(); ++j) {
      Rat c = (*inv)(i, j);
      if (i != j) c *= 2;
      if (c == 0) continue;
      out.coords[size_t(S2.monomial_index({i, j}))] = c;
    }
  return out;
}

SymVector qT_in_ambient(const SymTower& ambient_tower, const Sublattice& T) {
  IMat g = T.restricted_gram();
  auto inv = qmat_inverse(qmat_from(g));
  if (!inv)
    throw precondition_error("qT_in_ambient: degenerate restricted form");
  const SymLattice& S1 = ambient_tower.at(1);
  std::vector<SymVector> lin;
  lin.reserve(size_t(T.rank()));
  for (int i = 0; i < T.rank(); ++i) {
    QVec row(size_t(S1.dim()));
    for (int j = 0; j < S1.dim(); ++j) row[size_t(j)] = Rat(T.basis(i, j));
    lin.push_back(sym_linear(S1, row));
  }
  SymVector out = sym_zero(ambient_tower.at(2));
  for (int i = 0; i < T.rank(); ++i)
    for (int j = 0; j < T.rank(); ++j) {
      if ((*inv)(i, j) == 0) continue;
      SymVector prod = sym_mul(ambient_tower, 1, lin[size_t(i)], 1, lin[size_t(j)]);
      sym_add_scaled(out, prod, (*inv)(i, j));
    }
  return out;
}

SymVector w_class(const SymTower& T, const Vec& b, const Vec& eta, int n) {
  const Int qb = square(T.base, b);
  const Int qe = square(T.base, eta);
  if (qb <= 0) throw precondition_error("w_class: q(b) must be positive");
  if (qe <= 0) throw precondition_error("w_class: q(eta) must be positive");
  if (pair(T.base, b, eta) != 0)
    throw precondition_error("w_class: b and eta must be orthogonal");
  const int m = n / 2;
  SymVector out = sym_zero(T.at(n));
  for (int k = 0; k <= m; ++k) {
    SymVector bpow = sym_power_vec(T.at(n - 2 * k), b);
    SymVector epow = sym_power_vec(T.at(2 * k), eta);
    SymVector term = sym_mul(T, n - 2 * k, bpow, 2 * k, epow);
    Int coeff = binom(static_cast<unsigned long>(n),
                      static_cast<unsigned long>(2 * k)) *
                ipow(qe, static_cast<unsigned long>(m - k)) *
                ipow(qb, static_cast<unsigned long>(k));
    if (k % 2 == 1) coeff = -coeff;
    sym_add_scaled(out, term, Rat(coeff));
  }
  return out;
}

SplitSides splitting_pair(const SymTower& T, const Vec& gamma, int k,
                          const SymVector& u, const SymVector& v) {
  const int n = int(T.level.size()) - 1;
  if (k < 0 || k > n) throw precondition_error("splitting_pair: bad k");
  SymVector gn = sym_power_vec(T.at(n), gamma);
  SymVector gk = sym_power_vec(T.at(k), gamma);
  SymVector gnk = sym_power_vec(T.at(n - k), gamma);
  SymVector uv = sym_mul(T, k, u, n - k, v);
  SplitSides s;
  s.lhs = q_n(T.at(n), gn, uv);
  s.rhs = Rat(binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
          q_n(T.at(k), gk, u) * q_n(T.at(n - k), gnk, v);
  return s;
}

namespace {

// All multisets of size deg over {0, ..., count-1}, lex order.
std::vector<std::vector<int>> multisets(int count, int deg) {
  std::vector<std::vector<int>> out;
  if (deg == 0) {
    out.push_back({});
    return out;
  }
  if (count == 0) return out;
  std::vector<int> cur(size_t(deg), 0);
  for (;;) {
    out.push_back(cur);
    int i = deg - 1;
    while (i >= 0 && cur[size_t(i)] == count - 1) --i;
    if (i < 0) break;
    ++cur[size_t(i)];
    for (int j = i + 1; j < deg; ++j) cur[size_t(j)] = cur[size_t(i)];
  }
  return out;
}

}  // namespace

SymHodge hodge_classes_sym(const BrauerConfig& config, long size_cap) {
  const int n = config.n;
  SymHodge H;
  H.mukai = mukai(config);
  H.tower = sym_tower(H.mukai.lattice, n, size_cap);
  Sublattice N = hodge_classes_mukai(config);
  Sublattice T = transcendental_twist(config);

  // Degree-1 vectors of the N basis.
  const SymLattice& S1 = H.tower.at(1);
  std::vector<SymVector> nvec;
  for (int i = 0; i < N.rank(); ++i) {
    QVec row(size_t(S1.dim()));
    for (int j = 0; j < S1.dim(); ++j) row[size_t(j)] = Rat(N.basis(i, j));
    nvec.push_back(sym_linear(S1, row));
  }

  SymVector qT;
  if (n >= 2) qT = qT_in_ambient(H.tower, T);

  std::vector<QVec> rows;
  SymVector qTj;
  qTj.coords = QVec(1, Rat(1));  // unit of S^0
  for (int j = 0; 2 * j <= n; ++j) {
    if (j > 0) qTj = sym_mul(H.tower, 2 * (j - 1), qTj, 2, qT);
    const int deg = n - 2 * j;
    for (const auto& mu : multisets(N.rank(), deg)) {
      SymVector u;
      u.coords = QVec(1, Rat(1));
      int acc = 0;
      for (int idx : mu) {
        u = sym_mul(H.tower, acc, u, 1, nvec[size_t(idx)]);
        ++acc;
      }
      SymVector row = sym_mul(H.tower, deg, u, 2 * j, qTj);
      rows.push_back(std::move(row.coords));
    }
  }

  QMat span(int(rows.size()), H.tower.at(n).dim());
  for (int i = 0; i < span.m; ++i)
    for (int j = 0; j < span.n; ++j) span(i, j) = rows[size_t(i)][size_t(j)];
  IMat cleared = clear_denominators_rows(span);
  // rational span cap Z^D: saturation by a double integer kernel
  IMat C = left_kernel(imat_transpose(cleared));
  H.basis = left_kernel(imat_transpose(C));
  return H;
}

IndSymResult ind_sym(const BrauerConfig& config, long size_cap) {
  SymHodge H = hodge_classes_sym(config, size_cap);
  const SymLattice& Sn = H.tower.at(config.n);
  Int g = 0;
  for (int i = 0; i < H.basis.m; ++i) {
    SymVector v;
    v.coords = QVec(size_t(Sn.dim()));
    for (int j = 0; j < Sn.dim(); ++j) v.coords[size_t(j)] = Rat(H.basis(i, j));
    Rat r = rank_n(Sn, H.mukai.f_index, v);
    if (!rat_is_integer(r))
      throw internal_error("ind_sym: non-integral rank on an integral class");
    g = gcd(g, r.get_num());
  }
  g = iabs(g);
  Int per = period(config);
  Int per_n = ipow(per, static_cast<unsigned long>(config.n));
  if (g == 0 || !divides(g, per_n))
    throw internal_error("ind_sym: index does not divide period^n");

  IndSymResult out;
  out.value = g;
  // Obstruction modulus from an eta witness on T(X), when available.
  const Int qb = square(config.h2, config.b);
  if (config.t_lat.rank() >= 6 && qb != 0) {
    auto bt = sublattice_coords(config.t_lat, config.b);
    if (bt) {
      try {
        IntLattice TL = config.t_lat.restricted_lattice();
        EtaWitness eta = eta_finder(TL, *bt, IsotropicSearch{4, 4});
        Int modulus = 2 * ipow(eta.q_eta, static_cast<unsigned long>(config.n / 2)) *
                      discriminant(TL) * qb;
        out.obstruction_modulus = iabs(modulus);
      } catch (const search_exhausted&) {
      } catch (const precondition_error&) {
      }
    }
  }
  return out;
}

}  // namespace mlk
