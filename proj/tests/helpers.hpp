#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "parcaus/genotype.hpp"
#include "parcaus/partition.hpp"
#include "parcaus/segment.hpp"

namespace testutil {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline parcaus::Partition random_partition(std::mt19937_64& rng, std::size_t n) {
    std::vector<int> raw(n);
    int spread = uniform_int(rng, 1, static_cast<int>(n));
    for (std::size_t s = 0; s < n; ++s) raw[s] = uniform_int(rng, 1, spread);
    return parcaus::Partition::from_assign(raw);
}

// Random partition whose block count lands strictly between 1 and n.
inline parcaus::Partition random_interior_partition(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        parcaus::Partition p = random_partition(rng, n);
        if (p.blocks() > 1 && p.blocks() < static_cast<int>(n)) return p;
    }
}

inline std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < n; ++s)
        if (rng() & 1) out.push_back(s);
    return out;
}

inline std::vector<double> random_measurement(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> y(n);
    for (double& v : y) v = uniform01(rng) * 20.0 - 10.0;
    return y;
}

inline parcaus::PlainSegment random_segment(std::mt19937_64& rng, int n) {
    parcaus::PlainSegment t = parcaus::zero_segment(n);
    for (int i = 0; i < n; ++i) t.bits[i] = (rng() & 1) != 0;
    return t;
}

inline parcaus::GenotypeTable random_table(std::mt19937_64& rng, int individuals, int positions,
                                           int alleles = 4) {
    static const char alphabet[4] = {'A', 'C', 'G', 'T'};
    parcaus::GenotypeTable table;
    table.positions = positions;
    for (int s = 0; s < individuals; ++s) {
        table.ids.push_back("i" + std::to_string(s));
        std::vector<std::array<char, 2>> row(positions);
        for (int p = 0; p < positions; ++p) {
            row[p][0] = alphabet[uniform_int(rng, 0, alleles - 1)];
            row[p][1] = alphabet[uniform_int(rng, 0, alleles - 1)];
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

inline bool close(double a, double b, double rel = 1e-9) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace testutil
