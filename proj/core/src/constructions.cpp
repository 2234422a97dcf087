#include "mlk/constructions.hpp"

#include <algorithm>

namespace mlk {

namespace {

// Deterministic integer combination x with <x, r> = content(r) > 0,
// accumulated left to right.
Vec gcd_combo(const Vec& r) {
  Vec x(r.size(), Int(0));
  Int g = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (g == 0) {
      g = iabs(r[i]);
      x[i] = r[i] > 0 ? 1 : -1;
      continue;
    }
    Int u, v;
    Int g2 = extgcd(g, r[i], u, v);
    for (size_t j = 0; j < i; ++j) x[j] *= u;
    x[i] = v;
    g = g2;
  }
  if (g == 0) throw precondition_error("gcd_combo: zero vector");
  return x;
}

}  // namespace

EtaWitness eta_finder(const IntLattice& T, const Vec& b,
                      const IsotropicSearch& opts) {
  if (T.rank() < 6)
    throw precondition_error("eta_finder: rank(T) must be at least 6");
  if (!T.nondegenerate)
    throw precondition_error("eta_finder: T must be nondegenerate");
  if (square(T, b) == 0)
    throw precondition_error("eta_finder: q(b) must be nonzero");

  Sublattice Gamma = orthogonal_complement(T, {b});
  IntLattice GL = Gamma.restricted_lattice();
  auto gamma = find_isotropic_escalating(GL, opts);
  if (!gamma)
    throw search_exhausted("eta_finder: no isotropic vector within bound " +
                           std::to_string(opts.bound_cap));
  Vec row = row_times_mat(*gamma, GL.gram);
  Int d = content(row);
  if (d == 0)
    throw precondition_error("eta_finder: isotropic vector pairs to zero");
  Vec delta = gcd_combo(row);
  if (pair(GL, *gamma, delta) != d)
    throw internal_error("eta_finder: pairing witness does not achieve d");

  Int qdelta = square(GL, delta);
  Vec eta(gamma->size());
  for (size_t i = 0; i < eta.size(); ++i)
    eta[i] = 2 * d * delta[i] + (2 - qdelta) * (*gamma)[i];

  EtaWitness w;
  w.q_eta = square(GL, eta);
  if (w.q_eta != 8 * d * d)
    throw internal_error("eta_finder: q(eta) != 8 d^2");
  Int bound = 8 * square(T, b) * square(T, b) * discriminant(T) * discriminant(T);
  if (!divides(w.q_eta, bound))
    throw internal_error("eta_finder: q(eta) does not divide 8 q(b)^2 disc(T)^2");
  w.eta = Gamma.to_ambient(eta);
  w.gamma = Gamma.to_ambient(*gamma);
  w.delta = Gamma.to_ambient(delta);
  w.d = d;
  return w;
}

ConicResult conic_point(const Int& qb, const Int& qh, long nu, long p) {
  if (p < 3 || p > 10000 || !is_prime(Int(p)))
    throw precondition_error("conic_point: p must be an odd prime at desk scale");
  if (nu <= 0 || nu >= p)
    throw precondition_error("conic_point: nu must be a nonzero residue");
  Int P(p);
  if (divides(P, qb * qh))
    throw precondition_error("conic_point: p divides qb*qh");
  long qbp = to_long(mod_floor(qb, P));
  long qhp = to_long(mod_floor(qh, P));
  auto solve = [&](long target_nu) -> std::optional<std::pair<long, long>> {
    for (long k = 1; k < p; ++k)
      for (long l = 0; l < p; ++l)
        if ((k * k % p * qbp + l * l % p * qhp) % p == target_nu * qbp % p)
          return std::make_pair(k, l);
    return std::nullopt;
  };
  ConicResult out;
  out.point = solve(nu);
  if (!out.point) {
    for (long t = 1; t < p; ++t)
      if (solve(t)) out.admissible_nu.push_back(t);
  }
  return out;
}

std::optional<Int> hensel_quadratic(const Int& a2, const Int& a1,
                                    const Int& a0, long p, int m) {
  if (p < 3 || !is_prime(Int(p)))
    throw precondition_error("hensel_quadratic: p must be an odd prime");
  if (m < 1) throw precondition_error("hensel_quadratic: m must be positive");
  Int P(p);
  if (divides(P, a2))
    throw precondition_error("hensel_quadratic: p divides the leading coefficient");
  auto f = [&](const Int& x) { return a2 * x * x + a1 * x + a0; };
  auto fp = [&](const Int& x) { return 2 * a2 * x + a1; };

  std::optional<Int> root;
  for (long x = 0; x < p; ++x) {
    if (mod_floor(f(Int(x)), P) != 0) continue;
    if (m == 1) return Int(x);
    if (mod_floor(fp(Int(x)), P) != 0) {  // simple root, liftable
      root = Int(x);
      break;
    }
  }
  if (!root) return std::nullopt;

  Int Pm = ipow(P, static_cast<unsigned long>(m));
  Int x = *root;
  // Newton iteration; the derivative stays a unit mod p along the lift.
  for (int it = 0; it < 2 * m + 4 && mod_floor(f(x), Pm) != 0; ++it) {
    Int inv = mod_inverse(mod_floor(fp(x), Pm), Pm);
    x = mod_floor(x - f(x) * inv, Pm);
  }
  if (mod_floor(f(x), Pm) != 0)
    throw internal_error("hensel_quadratic: Newton iteration failed to converge");
  return x;
}

std::optional<HypPair> hyperbolic_in_complement(const IntLattice& h2,
                                                const std::vector<Vec>& span,
                                                const IsotropicSearch& opts) {
  Sublattice K = span.empty()
                     ? Sublattice{h2, imat_identity(h2.rank()), true}
                     : orthogonal_complement(
                           h2, saturation(h2, sublattice_span(h2, span)));
  if (K.rank() < 2) return std::nullopt;
  IntLattice KL = K.restricted_lattice();

  std::optional<HypPair> found;
  scan_shells(KL.rank(), opts.bound_cap, [&](const Vec& v) {
    if (content(v) != 1) return false;
    if (square(KL, v) != 0) return false;
    Vec row = row_times_mat(v, KL.gram);
    if (content(row) != 1) return false;  // no partner of pairing -1
    Vec x = gcd_combo(row);
    for (Int& c : x) c = -c;  // q(v, x) = -1
    Int qx = square(KL, x);
    if (mod_floor(qx, Int(2)) != 0) return false;  // odd square, skip candidate
    Int lambda = divexact(qx, Int(2));
    Vec f(x.size());
    for (size_t i = 0; i < x.size(); ++i) f[i] = x[i] + lambda * v[i];
    if (square(KL, f) != 0 || pair(KL, v, f) != -1)
      throw internal_error("hyperbolic_in_complement: completion failed");
    found = HypPair{K.to_ambient(v), K.to_ambient(f)};
    return true;
  });
  return found;
}

BPrimeResult b_prime(const BPrimeRequest& req, const IsotropicSearch& opts) {
  const IntLattice& L = req.h2;
  if (!L.nondegenerate)
    throw precondition_error("b_prime: lattice must be nondegenerate");
  if (req.p < 3 || req.p > 10000 || !is_prime(Int(req.p)))
    throw precondition_error("b_prime: p must be an odd prime at desk scale");
  if (req.m < 1) throw precondition_error("b_prime: m must be positive");
  if (req.nu <= 0 || req.nu >= req.p)
    throw precondition_error("b_prime: nu must be a nonzero residue mod p");
  const Int P(req.p);
  const Int qh = square(L, req.h);
  const Int qb = square(L, req.b);
  if (qh <= 0) throw precondition_error("b_prime: q(h) must be positive");
  if (divides(P, qh * discriminant(L)))
    throw precondition_error("b_prime: p must not divide q(h) * disc");
  if (pair(L, req.b, req.h) != 0)
    throw precondition_error("b_prime: b must be orthogonal to h");
  if (!is_primitive(L, req.b))
    throw precondition_error("b_prime: b must be primitive");
  if (divides(P, divisibility(L, req.b)))
    throw precondition_error("b_prime: p divides div(b)");
  const bool special = divides(P, qb);
  const int eps = special ? 2 : 1;
  if (req.epsilon != eps)
    throw precondition_error(special ? "b_prime: p | q(b) forces epsilon = 2"
                                     : "b_prime: p coprime to q(b) forces epsilon = 1");
  const int m = special ? 1 : req.m;
  if (special && req.m != 1)
    throw precondition_error("b_prime: the special branch forces m = 1");

  auto hyp = hyperbolic_in_complement(L, {req.b, req.h}, opts);
  if (!hyp)
    throw search_exhausted("b_prime: no hyperbolic plane found in <b,h>^perp");

  long k = 0;
  Int ell;
  bool ell_coprime = false;
  if (special) {
    k = 1;  // every k works in this branch
    ell = P;
    ell_coprime = false;
  } else {
    // Prefer conic points with l != 0 so later quadratic adjustments keep
    // p coprime to ell.
    std::optional<std::pair<long, long>> best;
    for (long kk = 1; kk < req.p && !best; ++kk)
      for (long ll = 1; ll < req.p && !best; ++ll)
        if (mod_floor(Int(kk) * kk * qb + Int(ll) * ll * qh - Int(req.nu) * qb,
                      P) == 0)
          best = std::make_pair(kk, ll);
    if (!best) {
      ConicResult c = conic_point(qb, qh, req.nu, req.p);
      if (!c.point)
        throw precondition_error("b_prime: conic has no admissible point for nu");
      best = c.point;
    }
    k = best->first;
    ell = Int(best->second);
    ell_coprime = (best->second % req.p) != 0;
  }

  // c = e' + lambda * (-f'): q(c) = 2 lambda, so q(b') grows with lambda.
  const Int Pm = ipow(P, static_cast<unsigned long>(m));
  const Int eps2 = Int(eps) * Int(eps);
  const Int A = eps2 * Int(k) * Int(k) * qb + ell * ell * qh;
  const Int denom = 2 * eps2 * Pm * Pm;
  const Int lambda = fdiv_q(-A, denom) + 1;  // smallest with q(b') > 0

  Vec c(L.rank());
  for (int i = 0; i < L.rank(); ++i)
    c[size_t(i)] = hyp->e[size_t(i)] - lambda * hyp->f[size_t(i)];
  Vec bp(L.rank());
  for (int i = 0; i < L.rank(); ++i)
    bp[size_t(i)] =
        Int(eps) * Int(k) * req.b[size_t(i)] + ell * req.h[size_t(i)] +
        Int(eps) * Pm * c[size_t(i)];

  BPrimeResult out;
  out.b_prime = bp;
  out.k = k;
  out.ell = ell;
  out.lambda = lambda;
  out.c = c;
  out.e_prime = hyp->e;
  out.f_prime = hyp->f;
  out.epsilon = eps;
  out.m = m;
  out.ell_coprime_to_p = ell_coprime;

  const Int qbp = square(L, bp);
  Int div_b = divisibility(L, bp);
  Int div_h = divisibility(L, req.h);
  Int want_div = gcd(Int(eps), div_h);
  out.certificate.push_back(
      {"primitive", content(bp), Int(1), Int(0), content(bp) == 1});
  out.certificate.push_back(
      {"div(b') = gcd(eps, div(h))", div_b, want_div, Int(0), div_b == want_div});
  out.certificate.push_back({"q(b') > 0", qbp, Int(1), Int(0), qbp > 0});
  out.certificate.push_back({"q(b') = nu q(b) mod p",
                             mod_floor(qbp - Int(req.nu) * qb, P), Int(0), P,
                             mod_floor(qbp - Int(req.nu) * qb, P) == 0});
  for (const CertEntry& e : out.certificate)
    if (!e.verdict)
      throw internal_error("b_prime: postcondition failed: " + e.condition);
  return out;
}

OGradyReport ogrady_check(const OGradyParams& params, std::optional<Int> qh) {
  OGradyReport rep;
  rep.hyp_p_odd = params.p >= 3 && is_prime(Int(params.p)) && params.p % 2 == 1;
  if (qh) {
    Int bad = *qh * Int(2 * params.n - 2) * Int(params.n + 3);
    rep.hyp_coprime = !divides(Int(params.p), bad);
  }
  const Int r0 = params.r0();
  const Int g = params.g();
  const Int l = params.l();
  const Int ebar = params.ebar();
  const Int n1 = Int(params.n - 1);
  const Int pm1 = r0 - 1;

  {
    // g | (r0-1)/2, a condition on odd r0 only
    OGradyCondition c;
    c.name = "1.2.2";
    const bool odd_r0 = mod_floor(r0, Int(2)) == 1;
    c.raw_lhs = odd_r0 ? fdiv_q(r0 - 1, Int(2)) : Int(0);
    c.raw_modulus = g;
    c.raw_ok = !odd_r0 || divides(g, c.raw_lhs);
    c.reduced_lhs = c.raw_lhs;
    c.reduced_modulus = c.raw_modulus;
    c.reduced_ok = c.raw_ok;
    c.agree = c.raw_ok == c.reduced_ok;
    rep.conditions.push_back(c);
  }
  {
    // l | (n-1), gcd(l, r0) = 1, gcd(l, (r0-1)/g) = 1
    OGradyCondition c;
    c.name = "1.2.3";
    bool ok = divides(l, n1) && gcd(l, r0) == 1 &&
              gcd(l, divexact(r0 - 1, g)) == 1;
    c.raw_lhs = l;
    c.raw_modulus = 0;
    c.raw_ok = ok;
    c.reduced_lhs = l;
    c.reduced_modulus = 0;
    c.reduced_ok = ok;
    c.agree = true;
    rep.conditions.push_back(c);
  }
  {
    // ebar + 2(n-1)(r0-1)^2/g^2 = 0 mod 8 l^2
    OGradyCondition c;
    c.name = "1.2.5";
    c.raw_lhs = ebar + 2 * n1 * divexact(pm1 * pm1, g * g);
    c.raw_modulus = 8 * l * l;
    c.raw_ok = divides(c.raw_modulus, c.raw_lhs);
    c.reduced_lhs = 4 * params.q_bprime + 2 * n1 * pm1 * pm1;
    c.reduced_modulus = 8;
    c.reduced_ok = divides(c.reduced_modulus, c.reduced_lhs);
    c.agree = c.raw_ok == c.reduced_ok;
    rep.conditions.push_back(c);
  }
  {
    // g^2 ebar + 2(n-1)(r0-1)^2 + 8 = 0 mod 8 r0
    OGradyCondition c;
    c.name = "1.2.4";
    c.raw_lhs = g * g * ebar + 2 * n1 * pm1 * pm1 + 8;
    c.raw_modulus = 8 * r0;
    c.raw_ok = divides(c.raw_modulus, c.raw_lhs);
    c.reduced_lhs = 2 * params.q_bprime + n1 + 4;
    c.reduced_modulus = r0;
    c.reduced_ok = divides(c.reduced_modulus, c.reduced_lhs);
    c.agree = c.raw_ok == c.reduced_ok;
    rep.conditions.push_back(c);
  }
  rep.all_ok = true;
  for (const auto& c : rep.conditions) rep.all_ok = rep.all_ok && c.raw_ok;
  return rep;
}

std::optional<Int> ogrady_adjust(const IntLattice& h2, const Vec& h,
                                 const Vec& bprime, const Int& ell, long p,
                                 int m, int n) {
  const Int qh = square(h2, h);
  const Int P(p);
  if (divides(P, 2 * qh))
    throw precondition_error("ogrady_adjust: p divides 2 q(h)");
  if (divides(P, ell)) throw precondition_error("ogrady_adjust: p divides ell");
  if (pair(h2, bprime, h) != ell * qh)
    throw precondition_error("ogrady_adjust: q(b', h) != ell q(h)");
  const Int qbp = square(h2, bprime);
  auto j = hensel_quadratic(2 * qh, 4 * ell * qh, 2 * qbp + Int(n + 3), p, m);
  if (!j) return std::nullopt;
  // re-evaluate through the quadratic form
  Vec shifted(bprime.size());
  for (size_t i = 0; i < shifted.size(); ++i)
    shifted[i] = bprime[i] + *j * h[i];
  Int check = 2 * square(h2, shifted) + Int(n + 3);
  if (mod_floor(check, ipow(P, static_cast<unsigned long>(m))) != 0)
    throw internal_error("ogrady_adjust: adjusted class fails the congruence");
  return j;
}

OGradyInvariants ogrady_invariants(long p, int m, int n) {
  if (p < 2 || !is_prime(Int(p)))
    throw precondition_error("ogrady_invariants: p must be prime");
  if (m < 0 || n < 1)
    throw precondition_error("ogrady_invariants: need m >= 0, n >= 1");
  OGradyInvariants inv;
  Int P(p);
  inv.rank = ipow(P, static_cast<unsigned long>(m * n));
  inv.c1_multiplier = ipow(P, static_cast<unsigned long>(m * (n - 1)));
  Int num = ipow(P, static_cast<unsigned long>(m * (2 * n - 2))) *
            (ipow(P, static_cast<unsigned long>(2 * m)) - 1);
  inv.delta_coefficient = make_rat(num, Int(12));
  return inv;
}

SplitBound prime_split_bound(const std::vector<std::pair<Int, int>>& factors,
                             int n) {
  SplitBound out;
  out.bound = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, m] = factors[i];
    if (!is_prime(p))
      throw precondition_error("prime_split_bound: " + p.get_str() +
                               " is not prime");
    if (m < 1) throw precondition_error("prime_split_bound: exponent must be >= 1");
    for (size_t j = 0; j < i; ++j)
      if (factors[j].first == p)
        throw precondition_error("prime_split_bound: repeated prime " +
                                 p.get_str());
    SplitFactor f;
    f.p = p;
    f.mult = m;
    f.factor_bound = ipow(p, static_cast<unsigned long>(m * n));
    f.branch = m == 1 ? "non-special prime power or special reduced prime"
                      : "non-special prime power only";
    out.bound *= f.factor_bound;
    out.factors.push_back(std::move(f));
  }
  out.chain.push_back("ind(a) | prod_i ind(a_i)");
  out.chain.push_back("ind(a_i) | p_i^(m_i n) per factor branch");
  out.chain.push_back("hence ind(a) | " + out.bound.get_str());
  return out;
}

TransportCheck transport_check(long p, int n, const Int& q_bprime, int div) {
  if (div != 1 && div != 2)
    throw precondition_error("transport_check: div must be 1 or 2");
  TransportCheck t;
  Int P(p);
  Int base = q_bprime + P * P * Int(2 * n - 2);
  if (div == 2) {
    t.r = P;
    t.m_coeff = 1;
    t.h_square = make_rat(base, Int(4));
  } else {
    t.r = 4 * P;
    t.m_coeff = 2;
    t.h_square = make_rat(base, Int(1));
  }
  t.h_square_integral = rat_is_integer(t.h_square);
  if (t.h_square_integral) {
    Int H2 = t.h_square.get_num();
    t.holds = divides(2 * t.r, t.m_coeff * t.m_coeff * H2);
  }
  return t;
}

}  // namespace mlk
