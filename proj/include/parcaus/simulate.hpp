#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parcaus/genotype.hpp"

namespace parcaus {

// Planted-effect generator. Genotypes are drawn i.i.d. per position;
// phenotype = effect(joint genotype class at Q) + Normal(0, noise_sd).
struct PlantSpec {
    enum class Effect {
        ClassIndex,  // mean = first-occurrence index of the joint class * gap
        Xor,         // |Q| = 2: mean = gap * (bit1 ^ bit2), bit = cell differs
                     // from the lexicographically smallest cell at the position
        Table,       // explicit class -> mean map
    };

    std::uint64_t seed = 0;
    int individuals = 0;
    int positions = 0;
    std::vector<int> planted_support;  // Q, 1-based positions
    Effect effect = Effect::ClassIndex;
    double effect_gap = 1.0;
    std::map<std::string, double> effect_table;
    double noise_sd = 0.0;
    // per-position allele frequencies over {A,C,G,T}; empty rows mean
    // uniform over the first allele_count symbols
    std::vector<std::vector<double>> allele_freqs;
    int allele_count = 2;
};

struct GroundTruth {
    std::vector<int> planted_support;
    std::map<std::string, double> effect_table;  // realized class -> mean
    std::uint64_t seed = 0;
    double noise_sd = 0.0;
};

struct SimOutput {
    GenotypeTable table;
    std::vector<double> phenotype;
    GroundTruth truth;
};

SimOutput generate(const PlantSpec& spec);

}  // namespace parcaus
