#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlk/numeric.hpp"

namespace mlk {

// Integrality conditions for the two distinguished classes on a Brauer-Severi
// variety over a hyperkaehler base of dimension 4 or 6, under the ansatz
// c_odd = 0, c_{2i} = lambda_i q^i. The Fujiki-type constant cF is an input,
// never derived: dim 4 uses b^3 = cF q(b) (bq), dim 6 uses
// b^4 = cF q(b) (b^2 q).
struct DJPInstance {
  int dim = 4;  // 4 or 6
  Int r;        // relative dimension, >= dim
  Int ell;      // period, >= 1
  Int qb;       // q(b) != 0
  Rat cF;
};

void validate(const DJPInstance& inst);

// Solution of the cleared scalar congruence. For dim 4 the unknown is
// lambda1 itself; for dim 6 lambda1 = (ell / (r-2)) t with t the solved
// integer. The cleared modulus, coefficient, right-hand side and the
// obstructing gcd are reported for auditability.
struct DJPSolveResult {
  bool solvable = false;
  Rat lambda1;
  Int t;
  Int cleared_modulus;
  Int coeff;
  Int rhs;
  Int obstructing_gcd;
  bool scalar_reading = true;  // exact scalar form of the displayed condition
};

DJPSolveResult djp_dim4_solve(const DJPInstance& inst);
DJPSolveResult djp_dim6_solve(const DJPInstance& inst);

// delta: class of a generically finite multisection of degree ell^(dim/2);
// Delta: class of a relatively linear subvariety. The Delta variant replaces
// the relative dimension r by ell^(dim/2) and flips the sign of b.
enum class DJPVariant { delta, Delta };
DJPVariant parse_variant(const std::string& s);

struct DJPCondition {
  enum class Kind {
    trivial,          // satisfiable with c_i = 0
    lambda_integral,  // lambda_k in Z (scalar reading)
    lambda_multiple,  // lambda_k in multiple * Z
    congruence,       // (const_term + coeff * lambda_k) / modulus in Z
    unreduced,        // needs a Fujiki-type relation beyond the inputs
  };
  int degree = 0;
  Kind kind = Kind::trivial;
  int lambda_index = 1;
  Rat lambda_multiple;
  Rat const_term;
  Rat coeff;
  Int modulus;
  std::string note;
};

std::vector<DJPCondition> djp_conditions(DJPVariant variant,
                                         const DJPInstance& inst);

// Plugs a value of lambda into a record and checks exact integrality.
bool djp_condition_satisfied(const DJPCondition& cond, const Rat& lambda);

}  // namespace mlk
