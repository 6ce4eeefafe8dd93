#include "parcaus/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace parcaus {

namespace {

constexpr char kAlphabet[4] = {'A', 'C', 'G', 'T'};

// mt19937_64 output mapped to [0,1) with 53 bits; the generator's algorithm
// is fixed by the standard, so streams are stable across platforms.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; draws exactly two uniforms per call.
double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng), u2 = uniform01(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

char draw_allele(std::mt19937_64& rng, const std::vector<double>& freqs) {
    double u = uniform01(rng);
    double acc = 0.0;
    for (std::size_t k = 0; k < freqs.size(); ++k) {
        acc += freqs[k];
        if (u < acc) return kAlphabet[k];
    }
    return kAlphabet[freqs.size() - 1];
}

std::string cell_string(std::array<char, 2> cell) {
    if (cell[0] > cell[1]) std::swap(cell[0], cell[1]);
    return std::string{cell[0], cell[1]};
}

}  // namespace

SimOutput generate(const PlantSpec& spec) {
    if (spec.individuals < 1 || spec.positions < 1)
        throw std::invalid_argument("individuals and positions must be positive");
    if (spec.allele_count < 1 || spec.allele_count > 4)
        throw std::invalid_argument("allele count must be 1..4");
    if (spec.noise_sd < 0.0) throw std::invalid_argument("noise_sd must be non-negative");
    for (int q : spec.planted_support)
        if (q < 1 || q > spec.positions) throw std::invalid_argument("planted position out of range");
    if (spec.effect == PlantSpec::Effect::Xor && spec.planted_support.size() != 2)
        throw std::invalid_argument("xor effect needs exactly two planted positions");

    std::vector<std::vector<double>> freqs(spec.positions);
    for (int p = 0; p < spec.positions; ++p) {
        if (p < static_cast<int>(spec.allele_freqs.size()) && !spec.allele_freqs[p].empty()) {
            freqs[p] = spec.allele_freqs[p];
            if (freqs[p].size() > 4) throw std::invalid_argument("too many allele frequencies");
            double total = 0.0;
            for (double f : freqs[p]) {
                if (f < 0.0) throw std::invalid_argument("negative allele frequency");
                total += f;
            }
            if (std::abs(total - 1.0) > 1e-9)
                throw std::invalid_argument("allele frequencies must sum to 1");
        } else {
            freqs[p].assign(spec.allele_count, 1.0 / spec.allele_count);
        }
    }

    std::mt19937_64 rng(spec.seed);
    SimOutput out;
    out.table.positions = spec.positions;
    out.table.ids.reserve(spec.individuals);
    out.table.cells.assign(spec.individuals,
                           std::vector<std::array<char, 2>>(spec.positions));
    for (int s = 0; s < spec.individuals; ++s) {
        out.table.ids.push_back("ind" + std::to_string(s + 1));
        for (int p = 0; p < spec.positions; ++p) {
            out.table.cells[s][p][0] = draw_allele(rng, freqs[p]);
            out.table.cells[s][p][1] = draw_allele(rng, freqs[p]);
        }
    }

    std::vector<int> q_sorted = spec.planted_support;
    std::sort(q_sorted.begin(), q_sorted.end());
    std::vector<std::string> joint(spec.individuals);
    for (int s = 0; s < spec.individuals; ++s)
        for (int q : q_sorted) joint[s] += cell_string(out.table.cells[s][q - 1]);

    std::map<std::string, double> means;
    switch (spec.effect) {
        case PlantSpec::Effect::ClassIndex: {
            int next = 0;
            for (const std::string& cls : joint)
                if (means.emplace(cls, next * spec.effect_gap).second) ++next;
            break;
        }
        case PlantSpec::Effect::Xor: {
            std::array<std::string, 2> smallest;
            for (int k = 0; k < 2; ++k) {
                smallest[k] = cell_string(out.table.cells[0][q_sorted[k] - 1]);
                for (int s = 1; s < spec.individuals; ++s)
                    smallest[k] =
                        std::min(smallest[k], cell_string(out.table.cells[s][q_sorted[k] - 1]));
            }
            for (int s = 0; s < spec.individuals; ++s) {
                int bit1 = cell_string(out.table.cells[s][q_sorted[0] - 1]) != smallest[0];
                int bit2 = cell_string(out.table.cells[s][q_sorted[1] - 1]) != smallest[1];
                means[joint[s]] = spec.effect_gap * (bit1 ^ bit2);
            }
            break;
        }
        case PlantSpec::Effect::Table:
            for (const std::string& cls : joint) {
                auto it = spec.effect_table.find(cls);
                if (it == spec.effect_table.end())
                    throw std::invalid_argument("effect table not total on observed class " + cls);
                means[cls] = it->second;
            }
            break;
    }

    out.phenotype.resize(spec.individuals);
    for (int s = 0; s < spec.individuals; ++s)
        out.phenotype[s] = means[joint[s]] + spec.noise_sd * gaussian(rng);

    out.truth.planted_support = q_sorted;
    out.truth.effect_table = means;
    out.truth.seed = spec.seed;
    out.truth.noise_sd = spec.noise_sd;
    return out;
}

}  // namespace parcaus
