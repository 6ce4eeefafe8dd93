#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "parcaus/anova.hpp"
#include "parcaus/embedding.hpp"
#include "parcaus/gwas.hpp"
#include "parcaus/io.hpp"
#include "parcaus/report.hpp"
#include "parcaus/simulate.hpp"

using nlohmann::json;
using namespace parcaus;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int env_workers() {
    if (const char* env = std::getenv("PARCAUS_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

// Every run prints exactly one report to stdout; the payload goes to --out
// (inline in the report when out is "-").
void emit(const std::string& command, const json& config, double runtime_ms,
          const json& payload, const json& warnings, const std::string& out) {
    json report{{"command", command},
                {"config", config},
                {"timings_ms", json{{"total", runtime_ms}}},
                {"warnings", warnings}};
    if (out == "-") {
        report["outputs"] = payload;
    } else {
        write_file(out, payload.dump(2) + "\n");
        report["outputs"] = json{{"path", out}};
    }
    std::cout << report.dump(2) << std::endl;
}

PhenotypeClassifier make_classifier(int bins, const std::vector<double>& thresholds) {
    PhenotypeClassifier c;
    if (!thresholds.empty()) {
        c.mode = PhenotypeClassifier::Mode::Thresholds;
        c.thresholds = thresholds;
    } else if (bins > 0) {
        c.mode = PhenotypeClassifier::Mode::QuantileBins;
        c.bins = bins;
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial causal-inference engine"};
    app.require_subcommand(1);

    // solve
    std::string solve_a, solve_b, solve_out = "-";
    auto* solve = app.add_subcommand("solve", "reduce an embedding problem (a,b)");
    solve->add_option("a", solve_a, "partition file for a")->required();
    solve->add_option("b", solve_b, "partition file for b")->required();
    solve->add_option("--out", solve_out, "output file or - for stdout");

    // anova
    std::string anova_p, anova_y, anova_out = "-";
    auto* anova = app.add_subcommand("anova", "one-way ANOVA of a partition against a phenotype");
    anova->add_option("partition", anova_p, "partition file")->required();
    anova->add_option("phenotypes", anova_y, "phenotype TSV")->required();
    anova->add_option("--out", anova_out, "output file or - for stdout");

    // gwas
    std::string gwas_g, gwas_y, gwas_out = "-";
    int gwas_window = 1, gwas_iters = 2, gwas_bins = 0, gwas_workers = env_workers();
    bool gwas_phased = false;
    std::vector<double> gwas_thresholds;
    auto* gwas = app.add_subcommand("gwas", "run the association pipeline");
    gwas->add_option("--genotypes", gwas_g, "genotype TSV")->required();
    gwas->add_option("--phenotypes", gwas_y, "phenotype TSV")->required();
    gwas->add_option("--window", gwas_window, "decomposition window");
    gwas->add_option("--iterations", gwas_iters, "refinement iterations");
    gwas->add_option("--bins", gwas_bins, "quantile bins for the phenotype classifier");
    gwas->add_option("--thresholds", gwas_thresholds, "threshold classifier cut points");
    gwas->add_flag("--phased", gwas_phased, "treat allele pairs as ordered");
    gwas->add_option("--workers", gwas_workers, "worker threads");
    gwas->add_option("--out", gwas_out, "output file or - for stdout");

    // simulate
    std::uint64_t sim_seed = 0;
    int sim_n = 100, sim_pos = 20, sim_alleles = 2;
    std::vector<int> sim_support;
    std::string sim_effect = "class-index", sim_prefix = "sim";
    double sim_gap = 1.0, sim_noise = 0.0;
    auto* simulate = app.add_subcommand("simulate", "generate planted synthetic data");
    simulate->add_option("--seed", sim_seed, "RNG seed");
    simulate->add_option("--individuals", sim_n, "number of individuals");
    simulate->add_option("--positions", sim_pos, "number of positions");
    simulate->add_option("--support", sim_support, "planted positions (1-based)")->required();
    simulate->add_option("--effect", sim_effect, "class-index or xor");
    simulate->add_option("--effect-gap", sim_gap, "mean gap between classes");
    simulate->add_option("--noise-sd", sim_noise, "Gaussian noise sd");
    simulate->add_option("--allele-count", sim_alleles, "alleles per position (1..4)");
    simulate->add_option("--out-prefix", sim_prefix, "output file prefix");

    // verify
    std::string ver_g, ver_y, ver_e, ver_tau, ver_out = "-";
    int ver_window = 1, ver_bins = 0;
    bool ver_phased = false;
    std::vector<double> ver_thresholds;
    auto* verify = app.add_subcommand("verify", "check an (e, tau) association");
    verify->add_option("--genotypes", ver_g, "genotype TSV")->required();
    verify->add_option("--phenotypes", ver_y, "phenotype TSV")->required();
    verify->add_option("--e", ver_e, "external-factor partition file")->required();
    verify->add_option("--tau", ver_tau, "segment file or literal")->required();
    verify->add_option("--window", ver_window, "decomposition window");
    verify->add_option("--bins", ver_bins, "quantile bins for the phenotype classifier");
    verify->add_option("--thresholds", ver_thresholds, "threshold classifier cut points");
    verify->add_flag("--phased", ver_phased, "treat allele pairs as ordered");
    verify->add_option("--out", ver_out, "output file or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (*solve) {
            Partition a = parse_partition(read_file(solve_a));
            Partition b = parse_partition(read_file(solve_b));
            ReductionTrace trace = reduce(a, chi(default_r(a, b), a, b),
                                          first_candidate_selector());
            emit("solve", json{{"a", solve_a}, {"b", solve_b}}, ms_since(start),
                 solve_payload(a, b, trace), json::array(), solve_out);
        } else if (*anova) {
            Phenotypes ph = parse_phenotypes_file(anova_y);
            Partition p = parse_partition(read_file(anova_p), ph.values.size());
            json warnings = json::array();
            if (ph.categorical) warnings.push_back("categorical encoding");
            emit("anova", json{{"partition", anova_p}, {"phenotypes", anova_y}}, ms_since(start),
                 anova_payload(anova_report(ph.values, p)), warnings, anova_out);
        } else if (*gwas) {
            GenotypeTable table = parse_genotypes_file(gwas_g, gwas_phased);
            Phenotypes ph = parse_phenotypes_file(gwas_y, table.ids);
            PipelineConfig cfg;
            cfg.window = gwas_window;
            cfg.iterations = gwas_iters;
            cfg.workers = gwas_workers;
            cfg.phased = gwas_phased;
            cfg.classifier = make_classifier(gwas_bins, gwas_thresholds);
            GwasResult res = run_gwas(table, ph.values, cfg);
            json warnings = json::array();
            if (ph.categorical) warnings.push_back("categorical encoding");
            if (res.degenerate) warnings.push_back("degenerate phenotype");
            json config{{"genotypes", gwas_g}, {"phenotypes", gwas_y},
                        {"window", gwas_window}, {"iterations", gwas_iters},
                        {"bins", gwas_bins},    {"phased", gwas_phased},
                        {"workers", gwas_workers}};
            emit("gwas", config, ms_since(start),
                 gwas_payload(res, table, ms_since(start)), warnings, gwas_out);
        } else if (*simulate) {
            PlantSpec spec;
            spec.seed = sim_seed;
            spec.individuals = sim_n;
            spec.positions = sim_pos;
            spec.planted_support = sim_support;
            spec.effect_gap = sim_gap;
            spec.noise_sd = sim_noise;
            spec.allele_count = sim_alleles;
            if (sim_effect == "class-index")
                spec.effect = PlantSpec::Effect::ClassIndex;
            else if (sim_effect == "xor")
                spec.effect = PlantSpec::Effect::Xor;
            else
                throw std::invalid_argument("unknown effect mode: " + sim_effect);
            SimOutput out = generate(spec);
            std::string gpath = sim_prefix + ".genotypes.tsv";
            std::string ypath = sim_prefix + ".phenotypes.tsv";
            std::string tpath = sim_prefix + ".truth.json";
            write_file(gpath, format_genotypes(out.table));
            write_file(ypath, format_phenotypes(out.table.ids, out.phenotype));
            json truth{{"planted_support", out.truth.planted_support},
                       {"effect_table", out.truth.effect_table},
                       {"seed", out.truth.seed},
                       {"noise_sd", out.truth.noise_sd}};
            write_file(tpath, truth.dump(2) + "\n");
            json config{{"seed", sim_seed},       {"individuals", sim_n},
                        {"positions", sim_pos},   {"support", sim_support},
                        {"effect", sim_effect},   {"effect_gap", sim_gap},
                        {"noise_sd", sim_noise},  {"allele_count", sim_alleles}};
            json payload{{"genotypes", gpath}, {"phenotypes", ypath}, {"truth", tpath}};
            emit("simulate", config, ms_since(start), payload, json::array(), "-");
        } else if (*verify) {
            GenotypeTable table = parse_genotypes_file(ver_g, ver_phased);
            Phenotypes ph = parse_phenotypes_file(ver_y, table.ids);
            Partition e = parse_partition(read_file(ver_e), table.individuals());
            PlainSegment tau = parse_segment_file_or_literal(ver_tau, table.positions);
            PipelineConfig cfg;
            cfg.window = ver_window;
            cfg.phased = ver_phased;
            cfg.classifier = make_classifier(ver_bins, ver_thresholds);
            Partition b = phenotype_partition(ph.values, cfg.classifier);
            VerificationReport rep = verify_association(b, table, e, tau, cfg);
            json warnings = json::array();
            if (ph.categorical) warnings.push_back("categorical encoding");
            json config{{"genotypes", ver_g}, {"phenotypes", ver_y}, {"e", ver_e},
                        {"tau", ver_tau},     {"window", ver_window}};
            emit("verify", config, ms_since(start), verify_payload(rep), warnings, ver_out);
        }
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << std::endl;
        return 1;
    }
    return 0;
}
