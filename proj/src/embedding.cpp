#include "parcaus/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parcaus/anova.hpp"

namespace parcaus {

bool is_solution(const Partition& a, const Partition& x, const Partition& b) {
    return find_arrow(product(a, x), b).has_value();
}

RFunction default_r(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mismatched ground sets");
    RFunction r;
    r.map.assign(a.blocks(), 0);
    for (std::size_t s = 0; s < a.size(); ++s) {
        int i = a.block_of(s);
        // canonical numbering: the first element seen in block i is its minimum
        if (r.map[i - 1] == 0) r.map[i - 1] = b.block_of(s);
    }
    return r;
}

Partition chi(const RFunction& r, const Partition& a, const Partition& x) {
    if (a.size() != x.size()) throw std::invalid_argument("mismatched ground sets");
    const int na = a.blocks(), nx = x.blocks();
    if (static_cast<int>(r.map.size()) != na) throw std::invalid_argument("r does not match a");
    // |a_i ∩ x_j| and |a_i|
    std::vector<long long> cnt(static_cast<std::size_t>(na) * nx, 0);
    std::vector<long long> asz(na, 0);
    for (std::size_t s = 0; s < a.size(); ++s) {
        int i = a.block_of(s) - 1, j = x.block_of(s) - 1;
        ++cnt[static_cast<std::size_t>(i) * nx + j];
        ++asz[i];
    }
    std::vector<std::vector<std::size_t>> family(nx);
    for (std::size_t s = 0; s < a.size(); ++s) {
        int i = a.block_of(s) - 1, j = x.block_of(s) - 1;
        long long c = cnt[static_cast<std::size_t>(i) * nx + j];
        if (r.map[i] != j + 1 && c > 0 && c < asz[i]) family[j].push_back(s);
    }
    return delta_star(family, a.size());
}

std::vector<std::pair<int, int>> candidate_pairs(const Partition& a, const Partition& x) {
    if (a.size() != x.size()) throw std::invalid_argument("mismatched ground sets");
    const int na = a.blocks(), nx = x.blocks();
    std::vector<char> meets(static_cast<std::size_t>(na) * nx, 0);
    for (std::size_t s = 0; s < a.size(); ++s)
        meets[static_cast<std::size_t>(a.block_of(s) - 1) * nx + (x.block_of(s) - 1)] = 1;
    std::vector<char> blocked(static_cast<std::size_t>(nx) * nx, 0);
    for (int i = 0; i < na; ++i)
        for (int j1 = 0; j1 < nx; ++j1) {
            if (!meets[static_cast<std::size_t>(i) * nx + j1]) continue;
            for (int j2 = j1 + 1; j2 < nx; ++j2)
                if (meets[static_cast<std::size_t>(i) * nx + j2])
                    blocked[static_cast<std::size_t>(j1) * nx + j2] = 1;
        }
    std::vector<std::pair<int, int>> pairs;
    for (int j1 = 0; j1 < nx; ++j1)
        for (int j2 = j1 + 1; j2 < nx; ++j2)
            if (!blocked[static_cast<std::size_t>(j1) * nx + j2])
                pairs.emplace_back(j1 + 1, j2 + 1);
    return pairs;
}

ReductionTrace reduce(const Partition& a, const Partition& x, const PairSelector& select) {
    ReductionTrace trace;
    trace.initial = x;
    Partition u = x;
    for (;;) {
        auto cands = candidate_pairs(a, u);
        if (cands.empty()) break;
        SelectedPair sel = select(u, cands);
        u = contract(u, sel.pair.first, sel.pair.second);
        trace.steps.push_back({sel.pair, sel.epsilon, u});
    }
    trace.reduced = u;
    return trace;
}

PairSelector first_candidate_selector() {
    return [](const Partition&, const std::vector<std::pair<int, int>>& cands) {
        return SelectedPair{cands.front(), std::nullopt};
    };
}

PairSelector min_epsilon_selector(std::vector<double> y, double rel_tol) {
    return [y = std::move(y), rel_tol](const Partition& u,
                                       const std::vector<std::pair<int, int>>& cands) {
        DataObject d = anova_of(y, u);
        SelectedPair best{cands.front(), epsilon_contraction(d, cands.front().first,
                                                             cands.front().second)};
        for (std::size_t k = 1; k < cands.size(); ++k) {
            double cost = epsilon_contraction(d, cands[k].first, cands[k].second);
            double slack = rel_tol * std::max(1.0, std::abs(*best.epsilon));
            if (cost < *best.epsilon - slack) best = SelectedPair{cands[k], cost};
        }
        return best;
    };
}

bool is_optimal(const Partition& a, const Partition& b, const Partition& x) {
    if (!is_solution(a, x, b)) throw std::invalid_argument("not a solution");
    const int na = a.blocks(), nx = x.blocks(), nb = b.blocks();
    // for each (a-block, x-block): which b-blocks the intersection meets
    std::vector<int> first(static_cast<std::size_t>(na) * nx, 0);
    std::vector<char> multi(static_cast<std::size_t>(na) * nx, 0);
    for (std::size_t s = 0; s < a.size(); ++s) {
        std::size_t cell = static_cast<std::size_t>(a.block_of(s) - 1) * nx + (x.block_of(s) - 1);
        int k = b.block_of(s);
        if (first[cell] == 0)
            first[cell] = k;
        else if (first[cell] != k)
            multi[cell] = 1;
    }
    (void)nb;
    for (int j1 = 0; j1 < nx; ++j1)
        for (int j2 = j1 + 1; j2 < nx; ++j2) {
            bool witnessed = false;
            for (int i = 0; i < na && !witnessed; ++i) {
                std::size_t c1 = static_cast<std::size_t>(i) * nx + j1;
                std::size_t c2 = static_cast<std::size_t>(i) * nx + j2;
                if (first[c1] == 0 || first[c2] == 0) continue;
                witnessed = multi[c1] || multi[c2] || first[c1] != first[c2];
            }
            if (!witnessed) return false;
        }
    return true;
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
    if (n == 0 || n > 10) throw std::invalid_argument("oracle limit exceeded");
    std::vector<Partition> out;
    std::vector<int> rgs(n, 1);
    // restricted growth strings: rgs[0]=1, rgs[s] <= 1 + max(rgs[0..s-1])
    std::vector<int> maxes(n, 1);
    for (;;) {
        out.push_back(Partition::from_assign(rgs));
        std::size_t s = n - 1;
        while (s > 0) {
            if (rgs[s] <= maxes[s - 1]) break;
            --s;
        }
        if (s == 0) break;
        ++rgs[s];
        maxes[s] = std::max(maxes[s - 1], rgs[s]);
        for (std::size_t t = s + 1; t < n; ++t) {
            rgs[t] = 1;
            maxes[t] = maxes[s];
        }
    }
    return out;
}

std::vector<Partition> brute_force_minimal(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mismatched ground sets");
    std::vector<Partition> solutions;
    for (const Partition& x : enumerate_partitions(a.size()))
        if (is_solution(a, x, b)) solutions.push_back(x);
    // x has a strictly coarser solution iff some single contraction of x is
    // one: every partition between x and a coarser solution is itself a
    // solution, so the first merge along the chain already witnesses it.
    std::vector<Partition> minimal;
    for (const Partition& x : solutions) {
        bool coarser_exists = false;
        for (int j1 = 1; j1 <= x.blocks() && !coarser_exists; ++j1)
            for (int j2 = j1 + 1; j2 <= x.blocks() && !coarser_exists; ++j2)
                if (is_solution(a, contract(x, j1, j2), b)) coarser_exists = true;
        if (!coarser_exists) minimal.push_back(x);
    }
    return minimal;
}

}  // namespace parcaus
