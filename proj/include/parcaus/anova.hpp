#pragma once

#include <optional>
#include <vector>

#include "parcaus/partition.hpp"

namespace parcaus {

// Group summary (g, v, c): group count, group means, group sizes.
struct DataObject {
    int g = 0;
    std::vector<double> v;
    std::vector<long long> c;
};

struct CardinalMean {
    long long n = 0;
    double mu = 0.0;
};

DataObject anova_of(const std::vector<double>& y, const Partition& p);
CardinalMean cardinal_and_mean(const DataObject& d);

double eta(const DataObject& d);                                // between-group MSS
double rho(const std::vector<double>& y, const Partition& p);   // within-group MSS
std::optional<double> f_ratio(const std::vector<double>& y, const Partition& p);

// Merge groups j1, j2 (1-based) into one; pooled count and mean.
DataObject merge_groups(const DataObject& d, int j1, int j2);

// (g1-1)*eta(d1) - (g2-1)*eta(d2); requires matching cardinal and mean.
double epsilon_arrow(const DataObject& d1, const DataObject& d2, double rel_tol = 1e-9);

// Closed-form cost of merging groups j1, j2.
double epsilon_contraction(const DataObject& d, int j1, int j2);

double kappa(const Partition& p);                       // (|S|-g)/(g-1), needs 1<g<|S|
double nu(const Partition& p1, const Partition& p2);    // kappa(p2)/kappa(p1)

// Upper tail of the F(d1,d2) distribution.
double f_pvalue(double F, double d1, double d2);

double variance(const std::vector<double>& y);  // population variance of y

struct AnovaReport {
    int g = 0;
    long long n = 0;
    double mu = 0.0;
    double eta = 0.0;
    double rho = 0.0;
    std::optional<double> f_ratio;
    std::optional<double> p_value;
    long long dof1 = 0, dof2 = 0;  // (g-1, |S|-g)
};

AnovaReport anova_report(const std::vector<double>& y, const Partition& p);

}  // namespace parcaus
