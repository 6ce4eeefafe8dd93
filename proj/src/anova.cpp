#include "parcaus/anova.hpp"

#include <cmath>
#include <stdexcept>

namespace parcaus {

namespace {

// Kahan-compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

void check_measurement(const std::vector<double>& y, const Partition& p) {
    if (y.size() != p.size()) throw std::invalid_argument("measurement length mismatch");
    for (double v : y)
        if (!std::isfinite(v)) throw std::invalid_argument("measurement not finite");
}

}  // namespace

DataObject anova_of(const std::vector<double>& y, const Partition& p) {
    check_measurement(y, p);
    DataObject d;
    d.g = p.blocks();
    d.c.assign(d.g, 0);
    std::vector<KahanSum> sums(d.g);
    for (std::size_t s = 0; s < y.size(); ++s) {
        int b = p.block_of(s) - 1;
        ++d.c[b];
        sums[b].add(y[s]);
    }
    d.v.resize(d.g);
    for (int i = 0; i < d.g; ++i) d.v[i] = sums[i].value() / static_cast<double>(d.c[i]);
    return d;
}

CardinalMean cardinal_and_mean(const DataObject& d) {
    CardinalMean cm;
    KahanSum weighted;
    for (int i = 0; i < d.g; ++i) {
        cm.n += d.c[i];
        weighted.add(static_cast<double>(d.c[i]) * d.v[i]);
    }
    cm.mu = weighted.value() / static_cast<double>(cm.n);
    return cm;
}

double eta(const DataObject& d) {
    if (d.g <= 1) return 0.0;
    const double mu = cardinal_and_mean(d).mu;
    KahanSum acc;
    for (int i = 0; i < d.g; ++i) {
        double dev = d.v[i] - mu;
        acc.add(static_cast<double>(d.c[i]) * dev * dev);
    }
    return acc.value() / static_cast<double>(d.g - 1);
}

double rho(const std::vector<double>& y, const Partition& p) {
    check_measurement(y, p);
    const int g = p.blocks();
    const long long n = static_cast<long long>(y.size());
    if (g == static_cast<int>(y.size())) return 0.0;
    DataObject d = anova_of(y, p);
    KahanSum acc;
    for (std::size_t s = 0; s < y.size(); ++s) {
        double dev = y[s] - d.v[p.block_of(s) - 1];
        acc.add(dev * dev);
    }
    return acc.value() / static_cast<double>(n - g);
}

std::optional<double> f_ratio(const std::vector<double>& y, const Partition& p) {
    double r = rho(y, p);
    if (r <= 0.0) return std::nullopt;
    return eta(anova_of(y, p)) / r;
}

DataObject merge_groups(const DataObject& d, int j1, int j2) {
    if (j1 == j2 || j1 < 1 || j2 < 1 || j1 > d.g || j2 > d.g)
        throw std::invalid_argument("merge_groups: invalid group pair");
    DataObject out;
    out.g = d.g - 1;
    int lo = std::min(j1, j2) - 1, hi = std::max(j1, j2) - 1;
    for (int i = 0; i < d.g; ++i) {
        if (i == hi) continue;
        if (i == lo) {
            long long c = d.c[lo] + d.c[hi];
            out.c.push_back(c);
            out.v.push_back((static_cast<double>(d.c[lo]) * d.v[lo] +
                             static_cast<double>(d.c[hi]) * d.v[hi]) /
                            static_cast<double>(c));
        } else {
            out.c.push_back(d.c[i]);
            out.v.push_back(d.v[i]);
        }
    }
    return out;
}

double epsilon_arrow(const DataObject& d1, const DataObject& d2, double rel_tol) {
    CardinalMean a = cardinal_and_mean(d1), b = cardinal_and_mean(d2);
    double mu_scale = std::max({1.0, std::abs(a.mu), std::abs(b.mu)});
    if (a.n != b.n || std::abs(a.mu - b.mu) > rel_tol * mu_scale)
        throw std::invalid_argument("not an arrow");
    return static_cast<double>(d1.g - 1) * eta(d1) - static_cast<double>(d2.g - 1) * eta(d2);
}

double epsilon_contraction(const DataObject& d, int j1, int j2) {
    if (j1 == j2 || j1 < 1 || j2 < 1 || j1 > d.g || j2 > d.g)
        throw std::invalid_argument("epsilon_contraction: invalid group pair");
    double cj = static_cast<double>(d.c[j1 - 1]);
    double ck = static_cast<double>(d.c[j2 - 1]);
    double dv = d.v[j1 - 1] - d.v[j2 - 1];
    return cj * ck / (cj + ck) * dv * dv;
}

double kappa(const Partition& p) {
    const int g = p.blocks();
    const long long n = static_cast<long long>(p.size());
    if (g <= 1 || g >= n) throw std::invalid_argument("kappa undefined");
    return static_cast<double>(n - g) / static_cast<double>(g - 1);
}

double nu(const Partition& p1, const Partition& p2) {
    return kappa(p2) / kappa(p1);
}

namespace {

constexpr int kBetaMaxIter = 300;
constexpr double kBetaEps = 1e-14;
constexpr double kBetaFpMin = 1e-300;

// Lentz continued fraction for the regularized incomplete beta.
double betacf(double a, double b, double x) {
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kBetaFpMin) d = kBetaFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kBetaFpMin) d = kBetaFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kBetaFpMin) c = kBetaFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((qap + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kBetaFpMin) d = kBetaFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kBetaFpMin) c = kBetaFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kBetaEps) break;
    }
    return h;
}

double betai(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log(1.0 - x));
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

}  // namespace

double f_pvalue(double F, double d1, double d2) {
    if (!(F >= 0.0)) throw std::invalid_argument("F must be non-negative");
    if (d1 < 1.0 || d2 < 1.0) throw std::invalid_argument("invalid degrees of freedom");
    return betai(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * F));
}

double variance(const std::vector<double>& y) {
    if (y.empty()) throw std::invalid_argument("empty measurement");
    KahanSum sum;
    for (double v : y) sum.add(v);
    double mu = sum.value() / static_cast<double>(y.size());
    KahanSum sq;
    for (double v : y) sq.add((v - mu) * (v - mu));
    return sq.value() / static_cast<double>(y.size());
}

AnovaReport anova_report(const std::vector<double>& y, const Partition& p) {
    AnovaReport rep;
    DataObject d = anova_of(y, p);
    CardinalMean cm = cardinal_and_mean(d);
    rep.g = d.g;
    rep.n = cm.n;
    rep.mu = cm.mu;
    rep.eta = eta(d);
    rep.rho = rho(y, p);
    rep.dof1 = d.g - 1;
    rep.dof2 = rep.n - d.g;
    rep.f_ratio = f_ratio(y, p);
    if (rep.f_ratio && rep.dof1 >= 1 && rep.dof2 >= 1)
        rep.p_value = f_pvalue(*rep.f_ratio, static_cast<double>(rep.dof1),
                               static_cast<double>(rep.dof2));
    return rep;
}

}  // namespace parcaus
