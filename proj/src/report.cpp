#include "parcaus/report.hpp"

namespace parcaus {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

json blocks_json(const Partition& p) {
    json out = json::array();
    for (const auto& block : p.fibers()) out.push_back(block);
    return out;
}

}  // namespace

json anova_payload(const AnovaReport& rep) {
    return json{{"g", rep.g},
                {"n", rep.n},
                {"mu", rep.mu},
                {"eta", rep.eta},
                {"rho", rep.rho},
                {"f_ratio", optional_number(rep.f_ratio)},
                {"p_value", optional_number(rep.p_value)},
                {"dof", json::array({rep.dof1, rep.dof2})}};
}

json solve_payload(const Partition& a, const Partition& b, const ReductionTrace& trace) {
    json steps = json::array();
    for (const ReductionStep& st : trace.steps)
        steps.push_back(json{{"merged", json::array({st.merged.first, st.merged.second})},
                             {"epsilon", optional_number(st.epsilon)},
                             {"result", format_partition(st.result)}});
    const Partition& u = trace.reduced;
    bool solution = is_solution(a, u, b);
    return json{{"reduced", format_partition(u)},
                {"reduced_blocks", blocks_json(u)},
                {"trace", steps},
                {"is_solution", solution},
                {"is_optimal", solution ? json(is_optimal(a, b, u)) : json(false)}};
}

json verify_payload(const VerificationReport& rep) {
    return json{{"external_factors", rep.external_factors},
                {"localization", rep.localization},
                {"minimality (restricted to decomposition)", rep.minimality_restricted},
                {"component_required", rep.component_required}};
}

json gwas_payload(const GwasResult& res, const GenotypeTable& gamma,
                  std::optional<double> runtime_ms) {
    if (res.degenerate) return json{{"degenerate", true}};
    json e_blocks = json::array();
    for (const auto& block : res.e.fibers()) {
        json ids = json::array();
        for (std::size_t s : block) ids.push_back(gamma.ids[s]);
        e_blocks.push_back(ids);
    }
    json f = json::array(), p = json::array();
    for (const auto& v : res.component_f) f.push_back(optional_number(v));
    for (const auto& v : res.component_p) p.push_back(optional_number(v));
    json out{{"tau_support", truncation(res.tau)},
             {"e_blocks", e_blocks},
             {"component_f_ratios", f},
             {"p_values", p},
             {"conditions", json{{"external_factors", res.conditions.external_factors},
                                 {"localization", res.conditions.localization},
                                 {"minimality", res.conditions.minimality_restricted}}}};
    if (runtime_ms) out["runtime_ms"] = *runtime_ms;
    return out;
}

}  // namespace parcaus
