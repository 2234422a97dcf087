#include "mlk/report.hpp"

namespace mlk {

IndexReport build_index_report(const BrauerConfig& config, long size_cap) {
  IndexReport rep;
  rep.config = config;
  rep.period_value = period(config);
  rep.ind_mukai_value = ind_mukai(config);
  IndSymResult s = ind_sym(config, size_cap);
  rep.ind_sym_value = s.value;
  rep.obstruction_modulus = s.obstruction_modulus;
  rep.nonspecial = is_nonspecial(config);
  rep.e_tilde_witness = e_tilde(config);
  SymTower tower = sym_tower(mukai(config).lattice, config.n, size_cap);
  rep.e_tilde_sym = sym_power_vec(tower.at(config.n), rep.e_tilde_witness);
  return rep;
}

json index_report_json(const IndexReport& rep) {
  MukaiLattice M = mukai(rep.config);
  SymLattice Sn =
      sym_lattice(M.lattice, rep.config.n, default_size_cap());

  // Witness-recomputed quantities.
  Int rk_witness = rk(M, rep.e_tilde_witness);
  Rat rank_n_witness = rank_n(Sn, M.f_index, rep.e_tilde_sym);
  Int per_pow_n = ipow(rep.period_value, static_cast<unsigned long>(rep.config.n));

  json verdicts;
  verdicts["per_divides_ind_mukai"] =
      divides(rep.period_value, rep.ind_mukai_value) && rk_witness == rep.period_value;
  verdicts["ind_sym_divides_per_pow_n"] =
      rat_is_integer(rank_n_witness) &&
      rank_n_witness.get_num() == per_pow_n &&
      divides(rep.ind_sym_value, per_pow_n);
  bool hypotheses = rep.nonspecial && rep.obstruction_modulus.has_value() &&
                    gcd(rep.config.ell, *rep.obstruction_modulus) == 1;
  verdicts["per_pow_n_hypotheses_hold"] = hypotheses;
  if (hypotheses)
    verdicts["per_pow_n_divides_ind_sym"] =
        divides(per_pow_n, rep.ind_sym_value);

  json j;
  j["config"] = config_to_json(rep.config);
  j["period"] = int_to_json(rep.period_value);
  j["ind_mukai"] = int_to_json(rep.ind_mukai_value);
  j["ind_sym"] = int_to_json(rep.ind_sym_value);
  j["n"] = rep.config.n;
  j["nonspecial"] = rep.nonspecial;
  j["obstruction_modulus"] = rep.obstruction_modulus
                                 ? int_to_json(*rep.obstruction_modulus)
                                 : json(nullptr);
  j["witnesses"]["e_tilde"] = vec_to_json(rep.e_tilde_witness);
  j["witnesses"]["e_tilde_sym"] = symvec_to_json(Sn, rep.e_tilde_sym);
  j["verdicts"] = verdicts;
  return j;
}

json eta_report_json(const BrauerConfig& config, const EtaWitness& w) {
  IntLattice T = config.t_lat.restricted_lattice();
  json j;
  j["d"] = int_to_json(w.d);
  j["q_eta"] = int_to_json(w.q_eta);
  j["eta"] = vec_to_json(w.eta);
  j["gamma"] = vec_to_json(w.gamma);
  j["delta"] = vec_to_json(w.delta);
  j["eta_ambient"] = vec_to_json(config.t_lat.to_ambient(w.eta));
  json checks = json::array();
  Int qb = square(T, *sublattice_coords(config.t_lat, config.b));
  Int bound = 8 * qb * qb * discriminant(T) * discriminant(T);
  checks.push_back({{"condition", "q(eta) = 8 d^2"},
                    {"lhs", int_to_json(w.q_eta)},
                    {"modulus", 0},
                    {"verdict", w.q_eta == 8 * w.d * w.d}});
  checks.push_back({{"condition", "q(eta) | 8 q(b)^2 disc(T)^2"},
                    {"lhs", int_to_json(bound)},
                    {"modulus", int_to_json(w.q_eta)},
                    {"verdict", divides(w.q_eta, bound)}});
  j["checks"] = checks;
  return j;
}

json bprime_report_json(const BPrimeRequest& req, const BPrimeResult& res) {
  json j;
  j["b_prime"] = vec_to_json(res.b_prime);
  j["k"] = res.k;
  j["ell"] = int_to_json(res.ell);
  j["lambda"] = int_to_json(res.lambda);
  j["c"] = vec_to_json(res.c);
  j["e_prime"] = vec_to_json(res.e_prime);
  j["f_prime"] = vec_to_json(res.f_prime);
  j["epsilon"] = res.epsilon;
  j["m"] = res.m;
  j["p"] = req.p;
  j["nu"] = req.nu;
  j["ell_coprime_to_p"] = res.ell_coprime_to_p;
  j["q_b_prime"] = int_to_json(square(req.h2, res.b_prime));
  json cert = json::array();
  for (const CertEntry& e : res.certificate) {
    json c;
    c["condition"] = e.condition;
    c["lhs"] = int_to_json(e.lhs);
    c["rhs"] = int_to_json(e.rhs);
    c["modulus"] = int_to_json(e.modulus);
    c["verdict"] = e.verdict;
    cert.push_back(c);
  }
  j["certificate"] = cert;
  return j;
}

json ogrady_report_json(const OGradyParams& params, const OGradyReport& rep,
                        std::optional<Int> adjust_j,
                        const std::optional<TransportCheck>& transport) {
  json j;
  j["p"] = params.p;
  j["m"] = params.m;
  j["n"] = params.n;
  j["q_b_prime"] = int_to_json(params.q_bprime);
  j["r0"] = int_to_json(params.r0());
  j["g"] = int_to_json(params.g());
  j["l"] = int_to_json(params.l());
  j["e"] = int_to_json(params.e());
  j["e_bar"] = int_to_json(params.ebar());
  j["i"] = params.i();
  json conds = json::array();
  for (const auto& c : rep.conditions) {
    json e;
    e["condition"] = c.name;
    e["raw"] = {{"lhs", int_to_json(c.raw_lhs)},
                {"modulus", int_to_json(c.raw_modulus)},
                {"verdict", c.raw_ok}};
    e["reduced"] = {{"lhs", int_to_json(c.reduced_lhs)},
                    {"modulus", int_to_json(c.reduced_modulus)},
                    {"verdict", c.reduced_ok}};
    e["agree"] = c.agree;
    conds.push_back(e);
  }
  j["conditions"] = conds;
  j["all_ok"] = rep.all_ok;
  j["hypotheses"]["p_odd"] = rep.hyp_p_odd;
  j["hypotheses"]["p_coprime_qh_2n2_n3"] =
      rep.hyp_coprime ? json(*rep.hyp_coprime) : json(nullptr);
  j["adjust_j"] = adjust_j ? int_to_json(*adjust_j) : json(nullptr);
  if (transport) {
    j["transport"]["r"] = int_to_json(transport->r);
    j["transport"]["m"] = int_to_json(transport->m_coeff);
    j["transport"]["H2"] = rat_to_json(transport->h_square);
    j["transport"]["H2_integral"] = transport->h_square_integral;
    j["transport"]["2r_divides_m2_H2"] = transport->holds;
  }
  return j;
}

json djp_report_json(const DJPInstance& inst, DJPVariant variant,
                     const std::vector<DJPCondition>& conditions,
                     const DJPSolveResult& solve) {
  json j;
  j["dim"] = inst.dim;
  j["variant"] = variant == DJPVariant::delta ? "delta" : "Delta";
  j["r"] = int_to_json(inst.r);
  j["ell"] = int_to_json(inst.ell);
  j["qb"] = int_to_json(inst.qb);
  j["cF"] = rat_to_json(inst.cF);
  j["scalar_reading"] = true;
  json conds = json::array();
  for (const auto& c : conditions) {
    json e;
    e["degree"] = c.degree;
    switch (c.kind) {
      case DJPCondition::Kind::trivial:
        e["kind"] = "trivial";
        break;
      case DJPCondition::Kind::lambda_integral:
        e["kind"] = "lambda_integral";
        e["lambda_index"] = c.lambda_index;
        break;
      case DJPCondition::Kind::lambda_multiple:
        e["kind"] = "lambda_multiple";
        e["lambda_index"] = c.lambda_index;
        e["multiple"] = rat_to_json(c.lambda_multiple);
        break;
      case DJPCondition::Kind::congruence:
        e["kind"] = "congruence";
        e["lambda_index"] = c.lambda_index;
        e["const"] = rat_to_json(c.const_term);
        e["coeff"] = rat_to_json(c.coeff);
        e["modulus"] = int_to_json(c.modulus);
        break;
      case DJPCondition::Kind::unreduced:
        e["kind"] = "unreduced";
        break;
    }
    e["note"] = c.note;
    conds.push_back(e);
  }
  j["conditions"] = conds;
  j["solver"]["solvable"] = solve.solvable;
  if (solve.solvable) {
    j["solver"]["lambda1"] = rat_to_json(solve.lambda1);
    j["solver"]["t"] = int_to_json(solve.t);
  }
  j["solver"]["cleared_modulus"] = int_to_json(solve.cleared_modulus);
  j["solver"]["coeff"] = int_to_json(solve.coeff);
  j["solver"]["rhs"] = int_to_json(solve.rhs);
  j["solver"]["obstructing_gcd"] = int_to_json(solve.obstructing_gcd);
  return j;
}

json split_report_json(const SplitBound& bound) {
  json j;
  j["bound"] = int_to_json(bound.bound);
  json factors = json::array();
  for (const auto& f : bound.factors) {
    json e;
    e["p"] = int_to_json(f.p);
    e["m"] = f.mult;
    e["factor_bound"] = int_to_json(f.factor_bound);
    e["branch"] = f.branch;
    factors.push_back(e);
  }
  j["factors"] = factors;
  j["chain"] = bound.chain;
  return j;
}

}  // namespace mlk
