#include "parcaus/genotype.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parcaus {

static std::array<char, 2> cell_key(const GenotypeTable& gamma, std::size_t s, int pos) {
    std::array<char, 2> cell = gamma.cells[s][pos - 1];
    if (!gamma.phased && cell[0] > cell[1]) std::swap(cell[0], cell[1]);
    return cell;
}

Partition partition_at(const GenotypeTable& gamma, const PlainSegment& t) {
    if (t.n() != gamma.positions) throw std::invalid_argument("segment/table dimension mismatch");
    if (gamma.individuals() == 0) throw std::invalid_argument("empty ground set");
    std::vector<int> support = truncation(t);
    std::vector<std::string> words(gamma.individuals());
    for (std::size_t s = 0; s < gamma.individuals(); ++s) {
        std::string& w = words[s];
        w.reserve(2 * support.size());
        for (int pos : support) {
            auto cell = cell_key(gamma, s, pos);
            w.push_back(cell[0]);
            w.push_back(cell[1]);
        }
    }
    return Partition::from_labels(words);
}

bool pedigrad_check(const GenotypeTable& gamma, const PlainSegment& t1, const PlainSegment& t2) {
    if (!is_exact(t1, t2)) throw std::invalid_argument("pair not exact");
    return partition_at(gamma, segment_sum(t1, t2)) ==
           product(partition_at(gamma, t1), partition_at(gamma, t2));
}

Partition phenotype_partition(const std::vector<double>& y, const PhenotypeClassifier& c) {
    if (y.empty()) throw std::invalid_argument("empty ground set");
    for (double v : y)
        if (!std::isfinite(v)) throw std::invalid_argument("phenotype not finite");
    switch (c.mode) {
        case PhenotypeClassifier::Mode::ExactValue:
            return Partition::from_labels(y);
        case PhenotypeClassifier::Mode::QuantileBins: {
            if (c.bins < 1) throw std::invalid_argument("bin count must be positive");
            // bin by the fraction of strictly smaller samples, so equal values
            // always share a bin
            std::vector<double> sorted = y;
            std::sort(sorted.begin(), sorted.end());
            const double n = static_cast<double>(y.size());
            std::vector<int> labels(y.size());
            for (std::size_t s = 0; s < y.size(); ++s) {
                auto below = std::lower_bound(sorted.begin(), sorted.end(), y[s]) - sorted.begin();
                int bin = static_cast<int>(static_cast<double>(below) / n * c.bins) + 1;
                labels[s] = std::min(bin, c.bins);
            }
            return Partition::from_labels(labels);
        }
        case PhenotypeClassifier::Mode::Thresholds: {
            std::vector<double> th = c.thresholds;
            std::sort(th.begin(), th.end());
            std::vector<int> labels(y.size());
            for (std::size_t s = 0; s < y.size(); ++s)
                labels[s] =
                    static_cast<int>(std::upper_bound(th.begin(), th.end(), y[s]) - th.begin());
            return Partition::from_labels(labels);
        }
    }
    throw std::logic_error("unreachable classifier mode");
}

}  // namespace parcaus
