#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mlk {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Error taxonomy, mirrored by the CLI exit codes.
struct malformed_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A violated identity that is a theorem in the model; indicates a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};
struct search_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = a*x + b*y
inline Int extgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline Int iabs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Canonical residue in [0, |m|), m != 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Exact division; aborts inside GMP if not divisible, so callers must know.
inline Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline bool fits_i64(const Int& v) {
  // long is 64-bit on every platform we build for
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

inline long to_long(const Int& v) {
  if (!fits_i64(v)) throw precondition_error("integer out of machine range");
  return mpz_get_si(v.get_mpz_t());
}

inline Int content(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline bool is_zero_vec(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

// Divisors of n > 0 in increasing order. Desk scale (trial division).
std::vector<Int> divisors_sorted(const Int& n);

// Prime factorisation of n > 0 by trial division, primes increasing.
std::vector<std::pair<Int, int>> factorize(Int n);

// Modular inverse of a mod m with gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw precondition_error("element not invertible modulo " + m.get_str());
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace mlk
