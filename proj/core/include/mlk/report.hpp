#pragma once

#include "mlk/constructions.hpp"
#include "mlk/djp.hpp"
#include "mlk/json_io.hpp"

namespace mlk {

// Computed period and Hodge-theoretic indices with their witnesses. Every
// divisibility verdict in the serialised report is recomputed from the
// stored witnesses, not copied from fields.
struct IndexReport {
  BrauerConfig config;
  Int period_value;
  Int ind_mukai_value;
  Int ind_sym_value;
  std::optional<Int> obstruction_modulus;
  bool nonspecial = false;
  Vec e_tilde_witness;       // Mukai coordinates
  SymVector e_tilde_sym;     // monomial coordinates of its n-th power
};

IndexReport build_index_report(const BrauerConfig& config,
                               long size_cap = default_size_cap());

json index_report_json(const IndexReport& rep);

json eta_report_json(const BrauerConfig& config, const EtaWitness& w);
json bprime_report_json(const BPrimeRequest& req, const BPrimeResult& res);
json ogrady_report_json(const OGradyParams& params, const OGradyReport& rep,
                        std::optional<Int> adjust_j,
                        const std::optional<TransportCheck>& transport);
json djp_report_json(const DJPInstance& inst, DJPVariant variant,
                     const std::vector<DJPCondition>& conditions,
                     const DJPSolveResult& solve);
json split_report_json(const SplitBound& bound);

}  // namespace mlk
