#include "mlk/djp.hpp"

namespace mlk {

void validate(const DJPInstance& inst) {
  if (inst.dim != 4 && inst.dim != 6)
    throw precondition_error("djp: dim must be 4 or 6");
  if (inst.r < inst.dim)
    throw precondition_error("djp: r must be at least dim");
  if (inst.ell < 1) throw precondition_error("djp: ell must be positive");
  if (inst.qb == 0) throw precondition_error("djp: qb must be nonzero");
}

namespace {

// Smallest x >= 0 with coeff * x = rhs (mod modulus); reports the gcd.
struct Congruence {
  bool solvable = false;
  Int x;
  Int g;
};

Congruence solve_linear(const Int& coeff, const Int& rhs, const Int& modulus) {
  Congruence out;
  Int a = mod_floor(coeff, modulus);
  Int b = mod_floor(rhs, modulus);
  out.g = gcd(a == 0 ? modulus : a, modulus);
  if (!divides(out.g, b)) return out;
  Int m2 = divexact(modulus, out.g);
  if (m2 == 1) {
    out.solvable = true;
    out.x = 0;
    return out;
  }
  Int a2 = mod_floor(divexact(a, out.g), m2);
  Int b2 = mod_floor(divexact(b, out.g), m2);
  out.x = mod_floor(b2 * mod_inverse(a2, m2), m2);
  out.solvable = true;
  return out;
}

Int binom_int(const Int& n, unsigned long k) {
  // r stays at desk scale but keep this exact for any Int
  Int num = 1, den = 1;
  for (unsigned long i = 0; i < k; ++i) {
    num *= n - Int(i);
    den *= Int(i + 1);
  }
  return divexact(num, den);
}

}  // namespace

DJPSolveResult djp_dim4_solve(const DJPInstance& inst) {
  validate(inst);
  if (inst.dim != 4) throw precondition_error("djp_dim4_solve: dim must be 4");
  const Int cn = inst.cF.get_num();
  const Int cd = inst.cF.get_den();
  DJPSolveResult out;
  // (cF C(r,3) qb + (r-2) lambda) / ell in Z, cleared by the denominator of cF
  out.coeff = cd * (inst.r - 2);
  out.rhs = -cn * binom_int(inst.r, 3) * inst.qb;
  out.cleared_modulus = cd * inst.ell;
  Congruence c = solve_linear(out.coeff, out.rhs, out.cleared_modulus);
  out.obstructing_gcd = c.g;
  out.solvable = c.solvable;
  if (c.solvable) {
    out.t = c.x;
    out.lambda1 = Rat(c.x);
  }
  return out;
}

DJPSolveResult djp_dim6_solve(const DJPInstance& inst) {
  validate(inst);
  if (inst.dim != 6) throw precondition_error("djp_dim6_solve: dim must be 6");
  const Int cn = inst.cF.get_num();
  const Int cd = inst.cF.get_den();
  DJPSolveResult out;
  // lambda1 = (ell/(r-2)) t; after substitution and clearing:
  // cd (r-3) t = -2 cn C(r,4) qb  (mod 2 cd ell)
  out.coeff = cd * (inst.r - 3);
  out.rhs = Int(-2) * cn * binom_int(inst.r, 4) * inst.qb;
  out.cleared_modulus = 2 * cd * inst.ell;
  Congruence c = solve_linear(out.coeff, out.rhs, out.cleared_modulus);
  out.obstructing_gcd = c.g;
  out.solvable = c.solvable;
  if (c.solvable) {
    out.t = c.x;
    out.lambda1 = make_rat(inst.ell * c.x, inst.r - 2);
  }
  return out;
}

DJPVariant parse_variant(const std::string& s) {
  if (s == "delta") return DJPVariant::delta;
  if (s == "Delta") return DJPVariant::Delta;
  throw malformed_input("unknown variant '" + s + "' (expected delta or Delta)");
}

std::vector<DJPCondition> djp_conditions(DJPVariant variant,
                                         const DJPInstance& inst) {
  validate(inst);
  const bool upper = variant == DJPVariant::Delta;
  const Int reff =
      upper ? ipow(inst.ell, static_cast<unsigned long>(inst.dim / 2)) : inst.r;
  const std::string sign_note =
      upper ? " (sign flipped by (-b)^odd; the congruence is unchanged)" : "";
  std::vector<DJPCondition> out;
  for (int i = 1; i <= inst.dim; ++i) {
    DJPCondition c;
    c.degree = i;
    if (i <= inst.dim / 2 && !(inst.dim == 4 && i == 2) &&
        !(inst.dim == 6 && i == 3)) {
      c.kind = DJPCondition::Kind::trivial;
      c.note = "satisfiable with c_" + std::to_string(i) + " = 0";
    } else if (inst.dim == 4 && i == 2) {
      c.kind = DJPCondition::Kind::lambda_integral;
      c.lambda_index = 1;
      c.note = "scalar reading of C(r,2) b^2 + lambda1 q integral";
    } else if (inst.dim == 4 && i == 3) {
      c.kind = DJPCondition::Kind::congruence;
      c.lambda_index = 1;
      c.const_term = inst.cF * Rat(binom_int(reff, 3)) * Rat(inst.qb);
      c.coeff = Rat(reff - 2);
      c.modulus = inst.ell;
      c.note = "b^3 = cF q(b) (bq) substituted" + sign_note;
    } else if (inst.dim == 6 && i == 3) {
      c.kind = DJPCondition::Kind::lambda_multiple;
      c.lambda_index = 1;
      c.lambda_multiple = make_rat(inst.ell, reff - 2);
      c.note = "lambda1 in (ell/(r-2)) Z" + sign_note;
    } else if (inst.dim == 6 && i == 4) {
      c.kind = DJPCondition::Kind::congruence;
      c.lambda_index = 1;
      c.const_term = Rat(inst.ell) * inst.cF * Rat(binom_int(reff, 4)) * Rat(inst.qb);
      c.coeff = Rat(binom_int(reff - 2, 2));
      c.modulus = inst.ell * inst.ell;
      c.note = "b^4 = cF q(b) (b^2 q) substituted; lambda2 in Z for the q^2 term";
    } else {
      c.kind = DJPCondition::Kind::unreduced;
      c.note = "degree " + std::to_string(i) +
               " needs a Fujiki-type relation beyond the given cF";
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool djp_condition_satisfied(const DJPCondition& cond, const Rat& lambda) {
  switch (cond.kind) {
    case DJPCondition::Kind::trivial:
      return true;
    case DJPCondition::Kind::lambda_integral:
      return rat_is_integer(lambda);
    case DJPCondition::Kind::lambda_multiple: {
      if (cond.lambda_multiple == 0) return lambda == 0;
      Rat q = lambda / cond.lambda_multiple;
      return rat_is_integer(q);
    }
    case DJPCondition::Kind::congruence: {
      Rat v = (cond.const_term + cond.coeff * lambda) / Rat(cond.modulus);
      return rat_is_integer(v);
    }
    case DJPCondition::Kind::unreduced:
      return false;
  }
  return false;
}

}  // namespace mlk
