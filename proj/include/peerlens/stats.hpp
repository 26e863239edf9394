#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace peerlens {

struct MeanSem {
    double mean = 0.0;
    double sem = 0.0;  // sample sd (n-1 denominator) / sqrt(n)
};

// Requires n >= 2; a constant series is fine (sem 0).
MeanSem mean_sem(std::span<const double> values);

// Product-moment correlation. Requires equal lengths >= 3 and nonconstant
// inputs; throws DegenerateInput otherwise.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Variance explained by group membership: SS_between / SS_total with
// SS_total = SS_between + sum_i n_i * s2_i (s2 the n-1 sample variance;
// singleton groups contribute zero within-variance). Requires >= 2 groups,
// total n >= 3, nonzero SS_total.
double eta_squared(std::span<const std::vector<double>> groups);

struct WelchResult {
    double t = 0.0;
    double dof = 0.0;
    double p_two_sided = 1.0;
};

// Welch's unequal-variance t with Welch-Satterthwaite dof; p from the
// t-distribution. Each group needs n >= 2; both variances zero throws
// DegenerateInput.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation
// (tolerance 1e-10). Exposed for the t-distribution p-value and its tests.
double incomplete_beta(double a, double b, double x);

// Two-sided p for a t statistic at `dof` degrees of freedom.
double t_two_sided_p(double t, double dof);

struct GroupSummary {
    std::string label;
    std::size_t n = 0;
    double mean = 0.0;
    double sem = 0.0;
};

}  // namespace peerlens
