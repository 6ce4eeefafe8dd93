#include <doctest.h>

#include "helpers.hpp"
#include "parcaus/genotype.hpp"

using namespace parcaus;
using testutil::random_segment;
using testutil::random_table;

namespace {

// Five individuals, five positions, haploid letters stored as homozygous
// cells: Angie ATTCG, Bob TTTCC, Charles ATTGG, Doug ATACC, Eric ATTCG.
GenotypeTable five_table() {
    GenotypeTable t;
    t.ids = {"Angie", "Bob", "Charles", "Doug", "Eric"};
    t.positions = 5;
    auto row = [](const char* word) {
        std::vector<std::array<char, 2>> cells;
        for (int p = 0; p < 5; ++p) cells.push_back({word[p], word[p]});
        return cells;
    };
    t.cells = {row("ATTCG"), row("TTTCC"), row("ATTGG"), row("ATACC"), row("ATTCG")};
    return t;
}

PlainSegment unit5(int pos) { return from_support({pos}, 5); }

Partition blocks5(std::vector<int> assign) { return Partition::from_assign(assign); }

}  // namespace

TEST_CASE("partition images of the five-individual table") {
    GenotypeTable g = five_table();
    CHECK(partition_at(g, unit5(1)) == blocks5({1, 2, 1, 1, 1}));
    CHECK(partition_at(g, unit5(2)) == Partition::terminal(5));
    CHECK(partition_at(g, unit5(3)) == blocks5({1, 1, 1, 2, 1}));
    CHECK(partition_at(g, unit5(4)) == blocks5({1, 1, 2, 1, 1}));
    CHECK(partition_at(g, unit5(5)) == blocks5({1, 2, 1, 2, 1}));
    CHECK(partition_at(g, from_support({1, 3}, 5)) == blocks5({1, 2, 1, 3, 1}));
    CHECK(partition_at(g, from_support({4, 5}, 5)) == blocks5({1, 2, 3, 2, 1}));
    CHECK(partition_at(g, zero_segment(5)) == Partition::terminal(5));
    CHECK(partition_at(g, global_segment(5)) == blocks5({1, 2, 3, 4, 1}));
    CHECK_THROWS(partition_at(g, zero_segment(4)));
}

TEST_CASE("pedigrad property") {
    GenotypeTable g = five_table();
    CHECK(pedigrad_check(g, unit5(1), unit5(3)));
    CHECK(pedigrad_check(g, unit5(4), zero_segment(5)));
    CHECK_THROWS_WITH(pedigrad_check(g, unit5(1), unit5(1)), "pair not exact");

    std::mt19937_64 rng(51);
    for (int it = 0; it < 30; ++it) {
        GenotypeTable table = random_table(rng, 3 + rng() % 12, 2 + rng() % 10, 2);
        PlainSegment t1 = random_segment(rng, table.positions);
        PlainSegment t2 = random_segment(rng, table.positions);
        for (int i = 0; i < table.positions; ++i)
            if (t1.bits[i]) t2.bits[i] = false;  // force exactness
        CHECK(pedigrad_check(table, t1, t2));
    }
}

TEST_CASE("segment functoriality") {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 30; ++it) {
        GenotypeTable table = random_table(rng, 3 + rng() % 12, 2 + rng() % 10, 2);
        PlainSegment t1 = random_segment(rng, table.positions);
        PlainSegment t2 = t1;
        for (int i = 0; i < table.positions; ++i)
            if (t2.bits[i] && (rng() & 1)) t2.bits[i] = false;  // sub-support
        REQUIRE(arrow_exists(t1, t2));
        CHECK(find_arrow(partition_at(table, t1), partition_at(table, t2)));
    }
}

TEST_CASE("phased versus unordered cells") {
    GenotypeTable g;
    g.ids = {"u", "v"};
    g.positions = 1;
    g.cells = {{{'A', 'T'}}, {{'T', 'A'}}};
    g.phased = false;
    CHECK(partition_at(g, global_segment(1)) == Partition::terminal(2));
    g.phased = true;
    CHECK(partition_at(g, global_segment(1)) == Partition::discrete(2));
}

TEST_CASE("phenotype partitions") {
    // healthy/diseased example coded by first occurrence
    std::vector<double> y{0, 1, 0, 1, 1};
    PhenotypeClassifier exact;
    CHECK(phenotype_partition(y, exact) == blocks5({1, 2, 1, 2, 2}));

    std::vector<double> distinct{3.5, 1.25, 7.0};
    CHECK(phenotype_partition(distinct, exact) == Partition::discrete(3));

    PhenotypeClassifier one_bin{PhenotypeClassifier::Mode::QuantileBins, 1, {}};
    CHECK(phenotype_partition(distinct, one_bin) == Partition::terminal(3));

    PhenotypeClassifier quartiles{PhenotypeClassifier::Mode::QuantileBins, 2, {}};
    std::vector<double> spread{1, 2, 3, 4, 1, 4};
    Partition q = phenotype_partition(spread, quartiles);
    CHECK(q == Partition::from_assign({1, 1, 2, 2, 1, 2}));
    // ties always share a bin
    std::vector<double> tied{5, 5, 5, 5};
    CHECK(phenotype_partition(tied, quartiles) == Partition::terminal(4));

    PhenotypeClassifier cut{PhenotypeClassifier::Mode::Thresholds, 0, {2.5}};
    CHECK(phenotype_partition(spread, cut) == Partition::from_assign({1, 1, 2, 2, 1, 2}));
    CHECK_THROWS(phenotype_partition({}, exact));
}
