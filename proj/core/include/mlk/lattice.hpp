#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mlk/matrix.hpp"
#include "mlk/numeric.hpp"

namespace mlk {

// Finite-rank free Z-module with an integral symmetric bilinear form.
// Immutable after construction; the nondegeneracy flag is recomputed from the
// Gram determinant, never taken from input.
struct IntLattice {
  IMat gram;
  bool nondegenerate = false;

  int rank() const { return gram.m; }

  static IntLattice from_gram(IMat g);
};

IntLattice lattice_U();
IntLattice lattice_E8neg();
IntLattice lattice_K3();
IntLattice lattice_K3n(int n);  // requires n >= 2
IntLattice lattice_diag(const std::vector<Int>& entries);
IntLattice direct_sum(const IntLattice& a, const IntLattice& b);

Int pair(const IntLattice& L, const Vec& v, const Vec& w);
Int square(const IntLattice& L, const Vec& v);

// Positive generator d of the ideal q(v, L) = dZ. Requires v != 0 and L
// nondegenerate.
Int divisibility(const IntLattice& L, const Vec& v);

// |det(gram)|. The sign is dropped; every divisibility statement downstream
// is insensitive to it.
Int discriminant(const IntLattice& L);

bool is_primitive(const IntLattice& L, const Vec& v);  // requires v != 0

// Sublattice given by explicit basis rows in ambient coordinates. The
// restricted Gram is computed on demand. `saturated`, when set, is certified
// by construction (kernel-based bases are saturated).
struct Sublattice {
  IntLattice ambient;
  IMat basis;  // k x ambient.rank, independent rows
  bool saturated = false;

  int rank() const { return basis.m; }
  IMat restricted_gram() const;
  IntLattice restricted_lattice() const;
  // ambient coordinates of a vector given in basis coordinates
  Vec to_ambient(const Vec& coords) const;
};

// Checks row independence over Q.
Sublattice sublattice_span(const IntLattice& L, const IMat& rows);
Sublattice sublattice_span(const IntLattice& L, const std::vector<Vec>& rows);

// {v in L : q(v, s) = 0 for all s in S}; always saturated.
Sublattice orthogonal_complement(const IntLattice& L, const Sublattice& S);
Sublattice orthogonal_complement(const IntLattice& L,
                                 const std::vector<Vec>& span_rows);

// (rational span of S) intersected with L, via integer kernel computations.
Sublattice saturation(const IntLattice& L, const Sublattice& S);

// |A/B| when B is a finite-index sublattice of A (Smith normal form of the
// change-of-basis matrix); nullopt when the index is not finite (rank drop).
// Throws precondition_error when B is not contained in A.
std::optional<Int> sublattice_index(const Sublattice& A, const Sublattice& B);

// Membership of an ambient vector in the sublattice (integral coordinates).
std::optional<Vec> sublattice_coords(const Sublattice& S, const Vec& v);

// Primitive isotropic vector search by sup-norm shells.
//
// Enumeration order within a shell of sup-norm s: by support size, then
// support positions (lexicographic), then digit assignments with the first
// support position varying fastest and digits ordered 1, -1, 2, -2, ..., s,
// -s. The first isotropic vector found is primitive automatically (a
// non-primitive one has a smaller multiple in an earlier shell).
std::optional<Vec> find_isotropic(const IntLattice& L, int sup_norm_bound);

struct IsotropicSearch {
  int initial_bound = 32;
  int bound_cap = 1024;
};

// Doubles the bound up to the cap before giving up. Definite lattices are
// rejected immediately (only the zero vector is isotropic there).
std::optional<Vec> find_isotropic_escalating(const IntLattice& L,
                                             const IsotropicSearch& opts = {});

// Visits vectors in the deterministic shell order described above, stopping
// when the callback returns true. Returns false when the bound was exhausted.
bool scan_shells(int rank, int sup_norm_bound,
                 const std::function<bool(const Vec&)>& visit);

}  // namespace mlk
