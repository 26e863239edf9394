#include "peerlens/stats.hpp"

#include <cmath>
#include <cstdlib>

#include "peerlens/errors.hpp"

namespace peerlens {

namespace {

double sum(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double sample_variance(std::span<const double> values, double mean) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return values.size() > 1 ? ss / static_cast<double>(values.size() - 1) : 0.0;
}

// Continued fraction for the incomplete beta (Lentz's method).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIterations = 300;
    constexpr double kEps = 1e-10;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    // The continued fraction converges fastest below the mean of the
    // distribution; use the symmetry relation above it.
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double t_two_sided_p(double t, double dof) {
    if (dof <= 0.0) throw DegenerateInput("t_two_sided_p: dof must be positive");
    const double x = dof / (dof + t * t);
    return incomplete_beta(dof / 2.0, 0.5, x);
}

MeanSem mean_sem(std::span<const double> values) {
    if (values.size() < 2)
        throw DegenerateInput("mean_sem: need at least two values");
    MeanSem result;
    result.mean = sum(values) / static_cast<double>(values.size());
    const double var = sample_variance(values, result.mean);
    result.sem = std::sqrt(var / static_cast<double>(values.size()));
    return result;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw DegenerateInput("pearson: length mismatch");
    if (xs.size() < 3)
        throw DegenerateInput("pearson: need at least three points");
    const double n = static_cast<double>(xs.size());
    const double mx = sum(xs) / n;
    const double my = sum(ys) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DegenerateInput("pearson: constant input");
    return sxy / std::sqrt(sxx * syy);
}

double eta_squared(std::span<const std::vector<double>> groups) {
    if (groups.size() < 2)
        throw DegenerateInput("eta_squared: need at least two groups");
    std::size_t total_n = 0;
    double total_sum = 0.0;
    for (const auto& g : groups) {
        if (g.empty()) throw DegenerateInput("eta_squared: empty group");
        total_n += g.size();
        total_sum += sum(g);
    }
    if (total_n < 3)
        throw DegenerateInput("eta_squared: need total n >= 3");
    const double grand_mean = total_sum / static_cast<double>(total_n);
    double ss_between = 0.0;
    double ss_within = 0.0;
    for (const auto& g : groups) {
        const double n = static_cast<double>(g.size());
        const double mean = sum(g) / n;
        ss_between += n * (mean - grand_mean) * (mean - grand_mean);
        ss_within += n * sample_variance(g, mean);
    }
    const double ss_total = ss_between + ss_within;
    if (ss_total == 0.0)
        throw DegenerateInput("eta_squared: zero total variance");
    return ss_between / ss_total;
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2)
        throw DegenerateInput("welch_t: each group needs n >= 2");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = sum(a) / na;
    const double mb = sum(b) / nb;
    const double va = sample_variance(a, ma);
    const double vb = sample_variance(b, mb);
    if (va == 0.0 && vb == 0.0)
        throw DegenerateInput("welch_t: degenerate variance");
    const double sa = va / na;
    const double sb = vb / nb;
    WelchResult result;
    result.t = (ma - mb) / std::sqrt(sa + sb);
    result.dof = (sa + sb) * (sa + sb) /
                 (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
    result.p_two_sided = t_two_sided_p(result.t, result.dof);
    return result;
}

}  // namespace peerlens
