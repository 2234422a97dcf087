#include "mlk/mukai.hpp"

#include <algorithm>

namespace mlk {

Vec BrauerConfig::quotient_coords(const Vec& x) const {
  Vec y = row_times_mat(x, quot_v);
  return Vec(y.begin() + ns_rank(), y.end());
}

BrauerConfig make_config(IntLattice h2, IMat ns_rows, Vec b, Int ell, int n) {
  if (!h2.nondegenerate)
    throw precondition_error("config: h2 must be nondegenerate");
  if (n < 1) throw precondition_error("config: n must be positive");
  if (ell < 1) throw precondition_error("config: ell must be positive");
  if (int(b.size()) != h2.rank())
    throw precondition_error("config: b has wrong length");
  if (ns_rows.n != h2.rank() && ns_rows.m != 0)
    throw precondition_error("config: ns rows have wrong width");
  if (ns_rows.m == 0) ns_rows.n = h2.rank();
  if (hnf(ns_rows).rank != ns_rows.m)
    throw precondition_error("config: ns rows are linearly dependent");

  BrauerConfig cfg;
  cfg.h2 = std::move(h2);
  Sublattice raw{cfg.h2, ns_rows, false};
  cfg.ns = saturation(cfg.h2, raw);
  cfg.t_lat = orthogonal_complement(cfg.h2, cfg.ns);

  for (int i = 0; i < cfg.ns.rank(); ++i)
    if (pair(cfg.h2, b, cfg.ns.basis.row(i)) != 0)
      throw precondition_error("config: b is not orthogonal to ns");

  // Normalise (b, ell): stored b must be primitive.
  Int g = content(b);
  if (g == 0) {
    ell = 1;  // trivial twist
  } else {
    Int d = gcd(g, ell);
    if (d > 1) {
      for (Int& x : b) x = divexact(x, d);
      ell = divexact(ell, d);
    }
    if (content(b) != 1)
      throw precondition_error(
          "config: b/gcd(content(b), ell) is still non-primitive");
  }
  cfg.b = std::move(b);
  cfg.ell = std::move(ell);
  cfg.n = n;

  if (cfg.t_lat.rank() < 3)
    throw precondition_error("config: rank(T) must be at least 3");

  // Quotient change of basis from the Smith form of the ns basis.
  if (cfg.ns.rank() == 0) {
    cfg.quot_v = imat_identity(cfg.h2.rank());
    cfg.quot_vinv = cfg.quot_v;
  } else {
    Snf s = snf(cfg.ns.basis);
    for (int i = 0; i < cfg.ns.rank(); ++i)
      if (s.d(i, i) != 1)
        throw internal_error("config: saturated ns with nontrivial divisors");
    cfg.quot_v = std::move(s.v);
    cfg.quot_vinv = std::move(s.vinv);
  }
  return cfg;
}

Vec MukaiLattice::e_vec() const {
  Vec v(lattice.rank(), Int(0));
  v[e_index] = 1;
  return v;
}

Vec MukaiLattice::f_vec() const {
  Vec v(lattice.rank(), Int(0));
  v[f_index] = 1;
  return v;
}

Vec MukaiLattice::embed_h2(const Vec& x) const {
  Vec v(lattice.rank(), Int(0));
  for (int i = 0; i < h2_rank; ++i) v[i] = x[i];
  return v;
}

Vec MukaiLattice::assemble(const Int& r, const Vec& x, const Int& s) const {
  Vec v = embed_h2(x);
  v[e_index] = r;
  v[f_index] = s;
  return v;
}

MukaiLattice mukai(const BrauerConfig& config) {
  MukaiLattice M;
  M.lattice = direct_sum(config.h2, lattice_U());
  M.h2_rank = config.h2.rank();
  M.e_index = M.h2_rank;
  M.f_index = M.h2_rank + 1;
  return M;
}

Int rk(const MukaiLattice& M, const Vec& v) {
  return -pair(M.lattice, v, M.f_vec());
}

Int period(const BrauerConfig& config) {
  Vec qb = config.quotient_coords(config.b);
  for (const Int& m : divisors_sorted(config.ell)) {
    bool ok = true;
    for (const Int& c : qb)
      if (!divides(config.ell, m * c)) {
        ok = false;
        break;
      }
    if (ok) return m;
  }
  throw internal_error("period: no divisor of ell worked");
}

bool is_nonspecial(const BrauerConfig& config) {
  return gcd(config.ell, square(config.h2, config.b)) == 1;
}

bool is_hodge_mukai(const BrauerConfig& config, const MukaiLattice& M,
                    const Vec& v) {
  Vec x(v.begin(), v.begin() + M.h2_rank);
  const Int& r = v[M.e_index];
  Vec qx = config.quotient_coords(x);
  Vec qb = config.quotient_coords(config.b);
  for (size_t j = 0; j < qx.size(); ++j)
    if (config.ell * qx[j] + r * qb[j] != 0) return false;
  return true;
}

Sublattice hodge_classes_mukai(const BrauerConfig& config) {
  MukaiLattice M = mukai(config);
  const int R = M.h2_rank;
  const int k = config.ns_rank();
  const int q = R - k;
  Vec qb = config.quotient_coords(config.b);
  // Constraint matrix: row per Mukai coordinate, column per quotient
  // coordinate of Z^R / NS; kernel rows are exactly the Hodge classes.
  IMat C(R + 2, q);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < q; ++j) C(i, j) = config.ell * config.quot_v(i, k + j);
  for (int j = 0; j < q; ++j) C(M.e_index, j) = qb[j];
  IMat N = left_kernel(C);
  return Sublattice{M.lattice, std::move(N), true};
}

Sublattice transcendental_twist(const BrauerConfig& config) {
  MukaiLattice M = mukai(config);
  Sublattice N = hodge_classes_mukai(config);
  return orthogonal_complement(M.lattice, N);
}

Int ind_mukai(const BrauerConfig& config) {
  MukaiLattice M = mukai(config);
  Sublattice N = hodge_classes_mukai(config);
  Int g = 0;
  for (int i = 0; i < N.rank(); ++i) g = gcd(g, N.basis(i, M.e_index));
  g = iabs(g);
  Int per = period(config);
  if (g != per)
    throw internal_error("ind_mukai: gcd of ranks differs from the period");
  return g;
}

Vec e_tilde(const BrauerConfig& config) {
  MukaiLattice M = mukai(config);
  Int per = period(config);
  Vec a;
  if (per == config.ell) {
    a = config.b;
  } else {
    const int R = M.h2_rank;
    const int k = config.ns_rank();
    Vec qb = config.quotient_coords(config.b);
    Vec coords(R, Int(0));
    for (int j = 0; j < R - k; ++j)
      coords[k + j] = divexact(per * qb[j], config.ell);
    a = row_times_mat(coords, config.quot_vinv);
  }
  Vec neg(a.size());
  for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  Vec v = M.assemble(per, neg, Int(0));
  if (!is_hodge_mukai(config, M, v))
    throw internal_error("e_tilde: constructed class is not Hodge");
  return v;
}

}  // namespace mlk
