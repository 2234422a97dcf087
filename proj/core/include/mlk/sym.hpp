#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "mlk/mukai.hpp"

namespace mlk {

// Monomial cap for symmetric powers; MLK_SIZE_CAP overrides.
long default_size_cap();

// n-th symmetric power of a lattice, with the permanent-induced pairing:
// two degree-n monomials pair to the permanent of the n x n matrix of
// pairwise base pairings (factors listed with multiplicity). Permanents are
// evaluated by Ryser's formula with Gray-code iteration and memoized per
// monomial pair behind a mutex; cache population order cannot change values.
struct SymLattice {
  IntLattice base;
  int n = 0;
  std::vector<std::vector<int>> monomials;  // sorted index multisets, lex

  int dim() const { return int(monomials.size()); }
  int monomial_index(const std::vector<int>& mono) const;
  Int pair_monomials(int i, int j) const;

 private:
  friend SymLattice sym_lattice(const IntLattice&, int, long);
  struct Cache {
    std::mutex mu;
    std::unordered_map<uint64_t, Int> perms;
  };
  std::shared_ptr<Cache> cache_;
};

// Requires 0 <= n <= 6 and C(rank + n - 1, n) within the size cap.
SymLattice sym_lattice(const IntLattice& base, int n,
                       long size_cap = default_size_cap());

// Coordinate vector over the monomial basis; rational entries, integral
// vectors recognisable via is_integral.
struct SymVector {
  QVec coords;
};

bool sym_is_integral(const SymVector& v);
SymVector sym_zero(const SymLattice& S);
SymVector sym_scale(const SymVector& v, const Rat& c);
void sym_add_scaled(SymVector& acc, const SymVector& v, const Rat& c);

// Multinomial expansion of v^(n) over the monomial basis.
SymVector sym_power_vec(const SymLattice& S, const Vec& v);
SymVector sym_linear(const SymLattice& S1, const QVec& v);  // degree 1

// Permanent-induced pairing, extended bilinearly.
Rat q_n(const SymLattice& S, const SymVector& u, const SymVector& v);

// Levels 0..n of the symmetric algebra over one base lattice, with the
// product S^a x S^b -> S^{a+b} (plain polynomial multiplication of monomial
// coordinates).
struct SymTower {
  IntLattice base;
  std::vector<SymLattice> level;

  const SymLattice& at(int k) const { return level[size_t(k)]; }
};
SymTower sym_tower(const IntLattice& base, int n,
                   long size_cap = default_size_cap());
SymVector sym_mul(const SymTower& T, int na, const SymVector& a, int nb,
                  const SymVector& b);

// Normalised rank on S^n of a Mukai lattice: the product of the base rank
// functional over monomial factors, equivalently (-1)^n q^(n)(v, f^(n)) / n!.
// Integral on integral vectors.
Rat rank_n(const SymLattice& S, int f_index, const SymVector& v);

// Inverse-Gram class of a nondegenerate lattice T inside S^2(T) x Q;
// satisfies q^(2)(g^(2), q_T) = 2 q(g) for g in T.
SymVector qT_class(const SymTower& T2, const IntLattice& T);

// Same class for a sublattice, expressed in S^2 of the ambient lattice.
SymVector qT_in_ambient(const SymTower& ambient_tower, const Sublattice& T);

// w = sum_{k=0}^{m} (-1)^k C(n,2k) q(eta)^{m-k} q(b)^k b^(n-2k) eta^(2k),
// m = floor(n/2). Requires q(b) > 0, q(eta) > 0, q(b, eta) = 0.
SymVector w_class(const SymTower& T, const Vec& b, const Vec& eta, int n);

// Both sides of the splitting identity
//   q^(n)(g^(n), u*v) = C(n,k) q^(k)(g^(k), u) q^(n-k)(g^(n-k), v)
// evaluated exactly; exposed for the CLI verify command.
struct SplitSides {
  Rat lhs;
  Rat rhs;
};
SplitSides splitting_pair(const SymTower& T, const Vec& gamma, int k,
                          const SymVector& u, const SymVector& v);

// Integral Hodge classes of S^n of the twisted Mukai lattice under the
// Mumford-Tate-general model: the integral points of the span of
// { u * q_T^j : u in S^(n-2j) N(X,B) x Q, 0 <= 2j <= n } with q_T taken on
// T(X,B). basis rows are HNF-canonical coordinates over the monomial basis.
struct SymHodge {
  SymTower tower;
  MukaiLattice mukai;
  IMat basis;
};
SymHodge hodge_classes_sym(const BrauerConfig& config,
                           long size_cap = default_size_cap());

// gcd of rank_n over a basis of the symmetric Hodge lattice, with the
// obstruction modulus 2 q(eta)^m disc(T) q(b) when an eta witness exists
// (rank(T) >= 6); nullopt otherwise.
struct IndSymResult {
  Int value;
  std::optional<Int> obstruction_modulus;
};
IndSymResult ind_sym(const BrauerConfig& config,
                     long size_cap = default_size_cap());

}  // namespace mlk
