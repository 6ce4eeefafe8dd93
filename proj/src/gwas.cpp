#include "parcaus/gwas.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace parcaus {

namespace {

// Order-preserving parallel map over [0, n): results land by index, so the
// outcome is identical for any worker count.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t count = std::min<std::size_t>(workers, n);
    for (std::size_t w = 0; w < count; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += count) body(i);
        });
    for (auto& th : pool) th.join();
}

// Ascending F with absent values (perfect within-group fit) last.
bool f_less(const std::optional<double>& fa, const std::optional<double>& fb) {
    if (fa && fb) return *fa < *fb;
    return fa.has_value() && !fb.has_value();
}

}  // namespace

Partition a1(const Partition& a, const Partition& b, const std::vector<double>& y,
             double tolerance) {
    RFunction r = default_r(a, b);
    Partition seed = chi(r, a, b);
    return reduce(a, seed, min_epsilon_selector(y, tolerance)).reduced;
}

PlainSegment a2(const Partition& b, const GenotypeTable& gamma, const PlainSegment& t,
                const Partition& e, const std::vector<double>& y, const PipelineConfig& cfg) {
    if (!is_solution(partition_at(gamma, t), e, b))
        throw std::invalid_argument("e is not a solution at tau");
    // h = 0: e alone already solves
    if (find_arrow(e, b)) return zero_segment(t.n());

    std::vector<PlainSegment> parts = decompose(t, cfg.window);
    std::vector<Partition> x(parts.size());
    std::vector<std::optional<double>> f(parts.size());
    parallel_for(parts.size(), cfg.workers, [&](std::size_t i) {
        x[i] = a1(product(partition_at(gamma, parts[i]), e), b, y, cfg.tolerance);
        f[i] = f_ratio(y, x[i]);
    });

    std::vector<std::size_t> order(parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return f_less(f[i], f[j]); });

    PlainSegment acc = zero_segment(t.n());
    for (std::size_t i : order) {
        acc = segment_sum(acc, parts[i]);
        if (is_solution(partition_at(gamma, acc), e, b)) return acc;
    }
    throw std::logic_error("a2: no prefix solves despite valid precondition");
}

std::pair<PlainSegment, Partition> a3(const Partition& b, const GenotypeTable& gamma,
                                      int iterations, const std::vector<double>& y,
                                      const PipelineConfig& cfg) {
    if (iterations < 1) throw std::invalid_argument("iterations must be positive");
    PlainSegment global = global_segment(gamma.positions);
    Partition e = a1(partition_at(gamma, global), b, y, cfg.tolerance);
    PlainSegment tau = a2(b, gamma, global, e, y, cfg);
    for (int k = 1; k < iterations; ++k) {
        PlainSegment next = a2(b, gamma, tau, e, y, cfg);
        if (next == tau) break;
        tau = next;
    }
    return {tau, e};
}

VerificationReport verify_association(const Partition& b, const GenotypeTable& gamma,
                                      const Partition& e, const PlainSegment& t,
                                      const PipelineConfig& cfg) {
    VerificationReport rep;
    Partition full = partition_at(gamma, global_segment(gamma.positions));
    bool solves_full = is_solution(full, e, b);
    rep.external_factors = solves_full && is_optimal(full, b, e);
    rep.localization = is_solution(partition_at(gamma, t), e, b);

    std::vector<PlainSegment> parts = decompose(t, cfg.window);
    rep.component_required.resize(parts.size());
    bool all_required = rep.localization;
    for (std::size_t drop = 0; drop < parts.size(); ++drop) {
        PlainSegment rest = zero_segment(t.n());
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (i != drop) rest = segment_sum(rest, parts[i]);
        bool still_solves = is_solution(partition_at(gamma, rest), e, b);
        rep.component_required[drop] = !still_solves;
        if (still_solves) all_required = false;
    }
    rep.minimality_restricted = all_required;
    return rep;
}

GwasResult run_gwas(const GenotypeTable& gamma, const std::vector<double>& y,
                    const PipelineConfig& cfg) {
    GwasResult res;
    if (variance(y) == 0.0) {
        res.degenerate = true;
        return res;
    }
    Partition b = phenotype_partition(y, cfg.classifier);
    if (b.blocks() <= 1) {
        res.degenerate = true;
        return res;
    }
    auto [tau, e] = a3(b, gamma, cfg.iterations, y, cfg);
    res.tau = tau;
    res.e = e;
    res.conditions = verify_association(b, gamma, e, tau, cfg);

    std::vector<PlainSegment> parts = decompose(tau, cfg.window);
    res.component_f.resize(parts.size());
    res.component_p.resize(parts.size());
    parallel_for(parts.size(), cfg.workers, [&](std::size_t i) {
        Partition x = a1(product(partition_at(gamma, parts[i]), e), b, y, cfg.tolerance);
        res.component_f[i] = f_ratio(y, x);
        if (res.component_f[i]) {
            long long g = x.blocks(), n = static_cast<long long>(y.size());
            if (g > 1 && n > g)
                res.component_p[i] = f_pvalue(*res.component_f[i], static_cast<double>(g - 1),
                                              static_cast<double>(n - g));
        }
    });
    return res;
}

}  // namespace parcaus
