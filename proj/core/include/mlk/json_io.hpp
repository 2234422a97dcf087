#pragma once

#include <json.hpp>

#include "mlk/mukai.hpp"
#include "mlk/sym.hpp"

namespace mlk {

// nlohmann::json keeps object keys sorted, so dumps are byte-stable for a
// fixed input. Integers outside [-2^63, 2^63) serialise as decimal strings;
// rationals always as "num/den" strings.
using json = nlohmann::json;

json int_to_json(const Int& v);
Int int_from_json(const json& j);
json rat_to_json(const Rat& r);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);
json imat_to_json(const IMat& m);
IMat imat_from_json(const json& j, int expected_cols);

json lattice_to_json(const IntLattice& L);
// Accepts {"rank","gram"} or the input conveniences {"kind":"U"},
// {"kind":"E8neg"}, {"kind":"K3"}, {"kind":"K3n","n":2},
// {"kind":"diag","entries":[...]}, {"kind":"sum","parts":[...]}.
IntLattice lattice_from_json(const json& j);

json config_to_json(const BrauerConfig& c);
BrauerConfig config_from_json(const json& j);

// Sparse map from the sorted index multiset (key "[0,0,3]") to an
// integer/rational string; zero coordinates are omitted.
json symvec_to_json(const SymLattice& S, const SymVector& v);

std::string dump_canonical(const json& j, bool pretty);

}  // namespace mlk
