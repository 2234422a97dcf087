#pragma once

#include "mlk/lattice.hpp"

namespace mlk {

// Validated and normalised input datum: second-cohomology lattice with its
// BBF form, saturated Neron-Severi sublattice, primitive transcendental
// B-field numerator b with denominator ell (B = b/ell), and half-dimension n.
//
// The constructor divides gcd(content(b), ell) out of the pair and rejects
// configurations whose numerator stays non-primitive. It also rejects
// rank(T) < 3: the generic-period model needs room for a generic (2,0)-line.
struct BrauerConfig {
  IntLattice h2;
  Sublattice ns;      // saturated
  Sublattice t_lat;   // T(X) = orthogonal complement of ns in h2
  Vec b;              // primitive (zero only in the trivial twist ell = 1)
  Int ell;
  int n = 1;

  // Unimodular change of basis adapted to ns: the quotient map
  // Z^rank -> Z^rank / NS is x -> (x * quot_v) restricted to the last
  // rank - ns.rank() coordinates.
  IMat quot_v;
  IMat quot_vinv;

  int ns_rank() const { return ns.rank(); }
  Vec quotient_coords(const Vec& x) const;
};

BrauerConfig make_config(IntLattice h2, IMat ns_rows, Vec b, Int ell, int n);

// H2 + hyperbolic plane, basis ordered (h2 basis, e, f), q(e, f) = -1.
struct MukaiLattice {
  IntLattice lattice;
  int h2_rank = 0;
  int e_index = 0;
  int f_index = 0;

  Vec e_vec() const;
  Vec f_vec() const;
  Vec embed_h2(const Vec& x) const;
  // (r, x, s) = r e + x + s f
  Vec assemble(const Int& r, const Vec& x, const Int& s) const;
};

MukaiLattice mukai(const BrauerConfig& config);

// rk = -q(., f), i.e. the e-coordinate.
Int rk(const MukaiLattice& M, const Vec& v);

// Smallest m > 0 with m*(b/ell) integral modulo NS x Q; always a divisor of
// ell, found by sweeping divisors smallest-first with exact membership tests.
Int period(const BrauerConfig& config);

// gcd(ell, q(b)) = 1. Non-special classes have period exactly ell.
bool is_nonspecial(const BrauerConfig& config);

// Generic-period model: (r, x, s) is a Hodge class of the twist iff the
// image of x + r*(b/ell) in T(X) x Q vanishes, i.e. x + rB lies in NS x Q.
bool is_hodge_mukai(const BrauerConfig& config, const MukaiLattice& M,
                    const Vec& v);

// N(X,B): all integral Hodge classes of the twisted Mukai lattice, as the
// integral kernel of an exact rational linear map. Saturated; rank ns+2.
Sublattice hodge_classes_mukai(const BrauerConfig& config);

// T(X,B) = orthogonal complement of N(X,B) inside the Mukai lattice.
Sublattice transcendental_twist(const BrauerConfig& config);

// gcd of rk over a basis of N(X,B). Equality with period() is a theorem in
// this model; a mismatch throws internal_error.
Int ind_mukai(const BrauerConfig& config);

// Hodge class (per, -a, 0) with a = (per/ell) b + g for some g in NS x Q
// making a integral. For per = ell this is exactly (ell, -b, 0).
Vec e_tilde(const BrauerConfig& config);

}  // namespace mlk
