#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "parcaus/partition.hpp"

namespace parcaus {

// Maps each a-block (1-based) to a target block of x.
struct RFunction {
    std::vector<int> map;
    int operator()(int a_block) const { return map[a_block - 1]; }
};

// x solves the embedding problem (a,b): product(a,x) refines b.
bool is_solution(const Partition& a, const Partition& x, const Partition& b);

// r(i) = b-block holding the minimum element of a-block i.
RFunction default_r(const Partition& a, const Partition& b);

// Seed solution built from the straddling intersections a_i ∩ x_j.
Partition chi(const RFunction& r, const Partition& a, const Partition& x);

// Unordered pairs {j1,j2} of x-blocks no a-block meets both of; ascending
// lexicographic order with j1 < j2.
std::vector<std::pair<int, int>> candidate_pairs(const Partition& a, const Partition& x);

struct ReductionStep {
    std::pair<int, int> merged;
    std::optional<double> epsilon;  // cost when the selector is statistics-aware
    Partition result;
};

struct ReductionTrace {
    Partition initial;
    std::vector<ReductionStep> steps;
    Partition reduced;  // u*
};

struct SelectedPair {
    std::pair<int, int> pair;
    std::optional<double> epsilon;
};

using PairSelector =
    std::function<SelectedPair(const Partition& u, const std::vector<std::pair<int, int>>& candidates)>;

// Contract at selector-chosen candidate pairs until none remain.
ReductionTrace reduce(const Partition& a, const Partition& x, const PairSelector& select);

PairSelector first_candidate_selector();
// Minimal merge cost against y; ties (within rel_tol) keep the
// lexicographically smallest pair.
PairSelector min_epsilon_selector(std::vector<double> y, double rel_tol = 1e-9);

// Every pair of x-blocks is witnessed as unmergeable by an a-block
// straddling two b-blocks. Requires x to be a solution.
bool is_optimal(const Partition& a, const Partition& b, const Partition& x);

// All partitions of {0..n-1}; enumeration oracle, n <= 10.
std::vector<Partition> enumerate_partitions(std::size_t n);

// Solutions with no arrow to a different solution. Oracle, |S| <= 10.
std::vector<Partition> brute_force_minimal(const Partition& a, const Partition& b);

}  // namespace parcaus
