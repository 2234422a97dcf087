#pragma once

#include <optional>
#include <string>

#include "mlk/lattice.hpp"

namespace mlk {

// eta = 2 d delta + (2 - q(delta)) gamma for a primitive isotropic gamma in
// T cap b^perp of divisibility d and a pairing witness delta with
// q(gamma, delta) = d. Satisfies q(eta) = 8 d^2 and q(eta) | 8 q(b)^2 disc(T)^2.
struct EtaWitness {
  Vec eta, gamma, delta;  // coordinates in T
  Int d;
  Int q_eta;
};
EtaWitness eta_finder(const IntLattice& T, const Vec& b,
                      const IsotropicSearch& opts = {});

// Smallest (k, l), k in 1..p-1, l in 0..p-1, with
// k^2 qb + l^2 qh = nu qb (mod p). When the given nu has no such point, the
// diagnostic lists the nu in F_p^* that do.
struct ConicResult {
  std::optional<std::pair<long, long>> point;
  std::vector<long> admissible_nu;
};
ConicResult conic_point(const Int& qb, const Int& qh, long nu, long p);

// Root of a2 x^2 + a1 x + a0 mod p^m, p odd, p not dividing a2.
// m = 1: smallest root mod p (brute force). m >= 2: smallest simple root mod
// p (derivative a unit) lifted by Newton iteration; nullopt when no root
// exists or every root is critical.
std::optional<Int> hensel_quadratic(const Int& a2, const Int& a1,
                                    const Int& a0, long p, int m);

// Hyperbolic pair inside the orthogonal complement of the saturated span:
// q(e') = q(f') = 0, q(e', f') = -1. e' comes from the deterministic
// isotropic shell scan restricted to candidates of unit divisibility; f' is
// completed exactly via a gcd witness and an isotropic correction.
struct HypPair {
  Vec e, f;  // ambient coordinates
};
std::optional<HypPair> hyperbolic_in_complement(const IntLattice& h2,
                                                const std::vector<Vec>& span,
                                                const IsotropicSearch& opts = {});

struct BPrimeRequest {
  IntLattice h2;  // K3n-shaped or compatible; even form expected
  Vec h;          // polarisation, q(h) > 0, orthogonal to b
  Vec b;          // primitive, p coprime to content and divisibility
  long p = 0;     // odd prime, p not dividing q(h) * disc(h2)
  int m = 1;
  long nu = 1;     // nonzero residue mod p
  int epsilon = 1; // forced: 2 iff p | q(b), with m = 1 in that case
};

struct CertEntry {
  std::string condition;
  Int lhs;
  Int rhs;
  Int modulus;  // 0 when the check is an equality, not a congruence
  bool verdict;
};

// b' = epsilon k b + ell h + epsilon p^m c with c = e' + lambda (-f') in a
// hyperbolic plane of <b,h>^perp; deterministic choices: smallest admissible
// k, then smallest ell in the allowed residue class (preferring p coprime),
// then the smallest lambda making q(b') > 0. The certificate re-verifies
// primitivity, div(b') = gcd(epsilon, div(h)), q(b') > 0 and
// q(b') = nu q(b) mod p through independent lattice calls.
struct BPrimeResult {
  Vec b_prime;
  long k = 0;
  Int ell;  // the auxiliary integer of the construction
  Int lambda;
  Vec c;
  Vec e_prime, f_prime;
  int epsilon = 1;
  int m = 1;
  bool ell_coprime_to_p = false;
  std::vector<CertEntry> certificate;
};
BPrimeResult b_prime(const BPrimeRequest& req, const IsotropicSearch& opts = {});

// Numerical inputs r0 = p^m, g = l = 1, e = q(b'), ebar = 4 q(b'), i = 1.
struct OGradyParams {
  long p = 0;
  int m = 1;
  int n = 2;        // half-dimension
  Int q_bprime;     // even for an even lattice

  Int r0() const { return ipow(Int(p), static_cast<unsigned long>(m)); }
  Int g() const { return 1; }
  Int l() const { return 1; }
  Int e() const { return q_bprime; }
  Int ebar() const { return 4 * q_bprime; }
  int i() const { return 1; }
};

struct OGradyCondition {
  std::string name;
  Int raw_lhs;
  Int raw_modulus;
  bool raw_ok = false;
  Int reduced_lhs;
  Int reduced_modulus;
  bool reduced_ok = false;
  bool agree = false;
};

struct OGradyReport {
  std::vector<OGradyCondition> conditions;
  bool all_ok = false;
  bool hyp_p_odd = false;
  // p coprime to q(h) (2n-2) (n+3); unknown when q(h) was not supplied.
  std::optional<bool> hyp_coprime;
};
OGradyReport ogrady_check(const OGradyParams& params,
                          std::optional<Int> qh = std::nullopt);

// j mod p^m with 2 q(b' + j h) + (n+3) = 0 mod p^m, via the quadratic
// 2q(h) x^2 + 4 ell q(h) x + 2q(b') + (n+3). Requires p coprime to 2 q(h)
// and to ell, and q(b', h) = ell q(h). nullopt when no simple root exists.
std::optional<Int> ogrady_adjust(const IntLattice& h2, const Vec& h,
                                 const Vec& bprime, const Int& ell, long p,
                                 int m, int n);

// (p^{mn}, p^{m(n-1)}, p^{m(2n-2)} (p^{2m} - 1) / 12); the last value is an
// exact rational, no integrality claimed.
struct OGradyInvariants {
  Int rank;
  Int c1_multiplier;
  Rat delta_coefficient;
};
OGradyInvariants ogrady_invariants(long p, int m, int n);

// Bound prod p_i^{m_i n} from a prime factorisation of the period, each
// factor annotated with the branch of the argument that applies to it.
struct SplitFactor {
  Int p;
  int mult = 1;
  Int factor_bound;
  std::string branch;
};
struct SplitBound {
  Int bound;
  std::vector<SplitFactor> factors;
  std::vector<std::string> chain;
};
SplitBound prime_split_bound(const std::vector<std::pair<Int, int>>& factors,
                             int n);

// Parallel-transport bookkeeping: with H^2 recovered from q(b') and the
// divisibility branch, checks 2r | m^2 H^2 for the branch normalisation
// (div 2: r = p, m = 1, 4H^2 = q(b') + p^2(2n-2); div 1: r = 4p, m = 2,
// H^2 = q(b') + p^2(2n-2)).
struct TransportCheck {
  Int r;
  Int m_coeff;
  Rat h_square;
  bool h_square_integral = false;
  bool holds = false;
};
TransportCheck transport_check(long p, int n, const Int& q_bprime, int div);

}  // namespace mlk
