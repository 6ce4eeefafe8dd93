#pragma once

#include <array>
#include <string>
#include <vector>

#include "parcaus/partition.hpp"
#include "parcaus/segment.hpp"

namespace parcaus {

// Diploid genotype words, one row per individual; row order fixes the
// ground-set order. Cells keep the two symbols as read from the file;
// `phased` controls whether pair order matters when partitioning.
struct GenotypeTable {
    std::vector<std::string> ids;
    int positions = 0;
    std::vector<std::vector<std::array<char, 2>>> cells;  // [individual][position]
    bool phased = false;

    std::size_t individuals() const { return ids.size(); }
};

// Individuals share a block iff their allele pairs agree at every support
// position of t; empty support gives the terminal partition.
Partition partition_at(const GenotypeTable& gamma, const PlainSegment& t);

// partition_at(sum(t1,t2)) == product(partition_at(t1), partition_at(t2))
// for exact pairs; exposed as a testable oracle.
bool pedigrad_check(const GenotypeTable& gamma, const PlainSegment& t1, const PlainSegment& t2);

struct PhenotypeClassifier {
    enum class Mode { ExactValue, QuantileBins, Thresholds };
    Mode mode = Mode::ExactValue;
    int bins = 0;                    // QuantileBins
    std::vector<double> thresholds;  // Thresholds, ascending
};

// Individuals share a block iff their classified phenotype values coincide.
Partition phenotype_partition(const std::vector<double>& y, const PhenotypeClassifier& c);

}  // namespace parcaus
