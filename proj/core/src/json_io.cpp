#include "mlk/json_io.hpp"

namespace mlk {

json int_to_json(const Int& v) {
  if (fits_i64(v)) return json(mpz_get_si(v.get_mpz_t()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw malformed_input("invalid integer literal: " + j.dump());
    }
  }
  throw malformed_input("expected integer, got " + j.dump());
}

json rat_to_json(const Rat& r) { return json(r.get_str()); }

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw malformed_input("expected array, got " + j.dump());
  Vec v;
  for (const auto& e : j) v.push_back(int_from_json(e));
  return v;
}

json imat_to_json(const IMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.m; ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

IMat imat_from_json(const json& j, int expected_cols) {
  if (!j.is_array()) throw malformed_input("expected matrix rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  int cols = expected_cols;
  if (cols < 0) cols = rows.empty() ? 0 : int(rows[0].size());
  for (const Vec& r : rows)
    if (int(r.size()) != cols) throw malformed_input("ragged matrix rows");
  return imat_from_rows(rows, cols);
}

json lattice_to_json(const IntLattice& L) {
  json j;
  j["rank"] = L.rank();
  j["gram"] = imat_to_json(L.gram);
  return j;
}

IntLattice lattice_from_json(const json& j) {
  if (!j.is_object()) throw malformed_input("lattice must be an object");
  if (j.contains("kind")) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "U") return lattice_U();
    if (kind == "E8neg") return lattice_E8neg();
    if (kind == "K3") return lattice_K3();
    if (kind == "K3n") {
      if (!j.contains("n")) throw malformed_input("K3n lattice needs n");
      return lattice_K3n(j.at("n").get<int>());
    }
    if (kind == "diag") {
      std::vector<Int> entries;
      for (const auto& e : j.at("entries")) entries.push_back(int_from_json(e));
      return lattice_diag(entries);
    }
    if (kind == "sum") {
      const auto& parts = j.at("parts");
      if (!parts.is_array() || parts.empty())
        throw malformed_input("sum lattice needs nonempty parts");
      IntLattice L = lattice_from_json(parts[0]);
      for (size_t i = 1; i < parts.size(); ++i)
        L = direct_sum(L, lattice_from_json(parts[i]));
      return L;
    }
    throw malformed_input("unknown lattice kind '" + kind + "'");
  }
  if (!j.contains("gram")) throw malformed_input("lattice needs gram or kind");
  IMat g = imat_from_json(j.at("gram"), -1);
  if (j.contains("rank") && j.at("rank").get<int>() != g.m)
    throw malformed_input("lattice rank does not match gram size");
  return IntLattice::from_gram(std::move(g));
}

json config_to_json(const BrauerConfig& c) {
  json j;
  j["h2"] = lattice_to_json(c.h2);
  j["ns_basis"] = imat_to_json(c.ns.basis);
  j["b"] = vec_to_json(c.b);
  j["ell"] = int_to_json(c.ell);
  j["n"] = c.n;
  return j;
}

BrauerConfig config_from_json(const json& j) {
  if (!j.is_object()) throw malformed_input("config must be an object");
  for (const char* key : {"h2", "ns_basis", "b", "ell", "n"})
    if (!j.contains(key))
      throw malformed_input(std::string("config missing field '") + key + "'");
  IntLattice h2 = lattice_from_json(j.at("h2"));
  IMat ns = imat_from_json(j.at("ns_basis"), h2.rank());
  Vec b = vec_from_json(j.at("b"));
  Int ell = int_from_json(j.at("ell"));
  int n = j.at("n").get<int>();
  return make_config(std::move(h2), std::move(ns), std::move(b), std::move(ell),
                     n);
}

json symvec_to_json(const SymLattice& S, const SymVector& v) {
  json obj = json::object();
  for (int i = 0; i < S.dim(); ++i) {
    const Rat& c = v.coords[size_t(i)];
    if (c == 0) continue;
    std::string key = "[";
    const auto& mono = S.monomials[size_t(i)];
    for (size_t t = 0; t < mono.size(); ++t) {
      if (t) key += ",";
      key += std::to_string(mono[t]);
    }
    key += "]";
    obj[key] = c.get_str();
  }
  return obj;
}

std::string dump_canonical(const json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace mlk
