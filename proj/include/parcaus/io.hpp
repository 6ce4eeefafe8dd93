#pragma once

#include <string>
#include <vector>

#include "parcaus/genotype.hpp"
#include "parcaus/partition.hpp"
#include "parcaus/segment.hpp"

namespace parcaus {

struct Phenotypes {
    std::vector<std::string> ids;    // file order
    std::vector<double> values;      // numeric or integer-coded categorical
    bool categorical = false;
    std::vector<std::string> tokens; // raw tokens when categorical
};

GenotypeTable parse_genotypes_text(const std::string& text, bool phased);
GenotypeTable parse_genotypes_file(const std::string& path, bool phased);
std::string format_genotypes(const GenotypeTable& table);

// Joined against the genotype table's ids; errors name the offending ids.
Phenotypes parse_phenotypes_text(const std::string& text, const std::vector<std::string>& ids);
Phenotypes parse_phenotypes_file(const std::string& path, const std::vector<std::string>& ids);
// Standalone: row order of the file fixes the ground-set order.
Phenotypes parse_phenotypes_text(const std::string& text);
Phenotypes parse_phenotypes_file(const std::string& path);
std::string format_phenotypes(const std::vector<std::string>& ids,
                              const std::vector<double>& values);

Partition parse_partition_file(const std::string& path, std::size_t ground_size);
PlainSegment parse_segment_file_or_literal(const std::string& path_or_literal, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace parcaus
