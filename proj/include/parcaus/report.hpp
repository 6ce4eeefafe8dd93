#pragma once

#include <optional>

#include <json.hpp>

#include "parcaus/anova.hpp"
#include "parcaus/embedding.hpp"
#include "parcaus/gwas.hpp"

namespace parcaus {

// Schema-stable JSON payloads shared by the CLI and the test suites.

nlohmann::json anova_payload(const AnovaReport& rep);

nlohmann::json solve_payload(const Partition& a, const Partition& b, const ReductionTrace& trace);

nlohmann::json verify_payload(const VerificationReport& rep);

// Keys: tau_support, e_blocks, component_f_ratios, p_values, conditions,
// runtime_ms. Degenerate runs carry {degenerate: true} instead.
nlohmann::json gwas_payload(const GwasResult& res, const GenotypeTable& gamma,
                            std::optional<double> runtime_ms);

}  // namespace parcaus
