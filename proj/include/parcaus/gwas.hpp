#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parcaus/anova.hpp"
#include "parcaus/embedding.hpp"
#include "parcaus/genotype.hpp"
#include "parcaus/partition.hpp"
#include "parcaus/segment.hpp"

namespace parcaus {

struct PipelineConfig {
    int window = 1;
    int iterations = 2;
    int workers = 1;
    double tolerance = 1e-9;
    bool phased = false;
    PhenotypeClassifier classifier;
};

// Greedy minimal-solution search: seed chi(default_r(a,b), a, b), reduce
// with the minimal-merge-cost selector. Output is a certified optimal
// solution of (a,b).
Partition a1(const Partition& a, const Partition& b, const std::vector<double>& y,
             double tolerance = 1e-9);

// Localize: split t into components, solve each against e, keep the
// shortest F-ascending prefix whose pooled partition still solves with e.
PlainSegment a2(const Partition& b, const GenotypeTable& gamma, const PlainSegment& t,
                const Partition& e, const std::vector<double>& y, const PipelineConfig& cfg);

// Alternate a1 (external factors) and a2 (localization), `iterations` rounds
// with early exit once the segment stabilizes.
std::pair<PlainSegment, Partition> a3(const Partition& b, const GenotypeTable& gamma,
                                      int iterations, const std::vector<double>& y,
                                      const PipelineConfig& cfg);

struct VerificationReport {
    bool external_factors = false;          // e solves and is optimal vs the full table
    bool localization = false;              // e solves at tau
    bool minimality_restricted = false;     // dropping any tau component breaks localization
    std::vector<bool> component_required;   // per decomposition component of tau
};

VerificationReport verify_association(const Partition& b, const GenotypeTable& gamma,
                                      const Partition& e, const PlainSegment& t,
                                      const PipelineConfig& cfg);

struct GwasResult {
    bool degenerate = false;  // constant phenotype, nothing to associate
    PlainSegment tau;
    Partition e;
    std::vector<std::optional<double>> component_f;
    std::vector<std::optional<double>> component_p;
    VerificationReport conditions;
};

GwasResult run_gwas(const GenotypeTable& gamma, const std::vector<double>& y,
                    const PipelineConfig& cfg);

}  // namespace parcaus
