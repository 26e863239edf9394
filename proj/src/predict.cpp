#include "peerlens/predict.hpp"

#include <algorithm>
#include <cmath>

#include "peerlens/errors.hpp"
#include "peerlens/parallel.hpp"
#include "peerlens/rng.hpp"

namespace peerlens {

namespace {

// log(1 + exp(m)) without overflow.
double log1p_exp(double m) {
    if (m > 0.0) return m + std::log1p(std::exp(-m));
    return std::log1p(std::exp(m));
}

double sigmoid(double m) {
    if (m >= 0.0) return 1.0 / (1.0 + std::exp(-m));
    const double e = std::exp(m);
    return e / (1.0 + e);
}

// Per-row weights; --balanced gives each class equal total weight
// (weights sum to n either way).
std::vector<double> row_weights(const FeatureMatrix& X, bool balanced) {
    const std::size_t n = X.n_rows();
    std::vector<double> w(n, 1.0);
    if (!balanced) return w;
    std::size_t n_pos = 0;
    for (int y : X.labels) n_pos += static_cast<std::size_t>(y);
    const std::size_t n_neg = n - n_pos;
    const double w_pos = static_cast<double>(n) / (2.0 * static_cast<double>(n_pos));
    const double w_neg = static_cast<double>(n) / (2.0 * static_cast<double>(n_neg));
    for (std::size_t i = 0; i < n; ++i) w[i] = X.labels[i] == 1 ? w_pos : w_neg;
    return w;
}

double row_margin(const FeatureMatrix& X, std::size_t row,
                  const std::vector<double>& weights, double bias) {
    double m = bias;
    for (std::size_t k = X.row_ptr[row]; k < X.row_ptr[row + 1]; ++k)
        m += weights[static_cast<std::size_t>(X.cols[k])] * X.vals[k];
    return m;
}

FeatureMatrix select_rows(const FeatureMatrix& X,
                          const std::vector<std::size_t>& rows) {
    FeatureMatrix out;
    out.terms = X.terms;
    for (const std::size_t i : rows) {
        for (std::size_t k = X.row_ptr[i]; k < X.row_ptr[i + 1]; ++k) {
            out.cols.push_back(X.cols[k]);
            out.vals.push_back(X.vals[k]);
        }
        out.row_ptr.push_back(out.cols.size());
        out.labels.push_back(X.labels[i]);
        out.row_ids.push_back(X.row_ids[i]);
    }
    return out;
}

}  // namespace

void FeatureMatrix::add_row(const DocVector& v, int label, std::string id) {
    for (const auto& [col, val] : v.entries) {
        cols.push_back(col);
        vals.push_back(val);
    }
    row_ptr.push_back(cols.size());
    labels.push_back(label);
    row_ids.push_back(std::move(id));
}

FeatureMatrix build_features(const std::vector<TokenStream>& stem_docs,
                             const std::vector<int>& labels,
                             const std::vector<std::string>& ids, int min_df) {
    if (stem_docs.size() != labels.size() || stem_docs.size() != ids.size())
        throw DataError("build_features: docs, labels and ids must align");
    bool has_pos = false, has_neg = false;
    for (int y : labels) (y == 1 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg)
        throw DataError("build_features: both classes must be present");
    const TfIdfModel model =
        fit_tfidf(stem_docs, SectionKind::Title, min_df);
    FeatureMatrix X;
    X.terms = model.terms;
    for (std::size_t i = 0; i < stem_docs.size(); ++i)
        X.add_row(vectorize(model, stem_docs[i]), labels[i], ids[i]);
    return X;
}

double logreg_loss(const FeatureMatrix& X, const std::vector<double>& weights,
                   double bias, const TrainOptions& options) {
    const std::size_t n = X.n_rows();
    const std::vector<double> c = row_weights(X, options.balanced);
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = row_margin(X, i, weights, bias);
        loss += c[i] * (log1p_exp(m) - static_cast<double>(X.labels[i]) * m);
    }
    loss /= static_cast<double>(n);
    double penalty = 0.0;
    for (double w : weights) penalty += w * w;
    loss += options.lambda * penalty / (2.0 * static_cast<double>(n));
    return loss;
}

void logreg_gradient(const FeatureMatrix& X, const std::vector<double>& weights,
                     double bias, const TrainOptions& options,
                     std::vector<double>& grad_w, double& grad_b) {
    const std::size_t n = X.n_rows();
    const std::vector<double> c = row_weights(X, options.balanced);
    grad_w.assign(weights.size(), 0.0);
    grad_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = row_margin(X, i, weights, bias);
        const double residual =
            c[i] * (sigmoid(m) - static_cast<double>(X.labels[i]));
        grad_b += residual;
        for (std::size_t k = X.row_ptr[i]; k < X.row_ptr[i + 1]; ++k)
            grad_w[static_cast<std::size_t>(X.cols[k])] += residual * X.vals[k];
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    grad_b *= inv_n;
    for (std::size_t j = 0; j < grad_w.size(); ++j)
        grad_w[j] = grad_w[j] * inv_n +
                    options.lambda * weights[j] * inv_n;
}

LogRegModel train_logreg(const FeatureMatrix& X, const TrainOptions& options) {
    if (X.n_rows() == 0) throw DataError("train_logreg: empty feature matrix");
    for (double v : X.vals)
        if (!std::isfinite(v)) throw DataError("train_logreg: non-finite feature");
    bool has_pos = false, has_neg = false;
    for (int y : X.labels) (y == 1 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg)
        throw DataError("train_logreg: both classes must be present");

    LogRegModel model;
    model.lambda = options.lambda;
    model.weights.assign(X.n_cols(), 0.0);
    model.bias = 0.0;

    std::vector<double> grad_w;
    double grad_b = 0.0;
    double loss = logreg_loss(X, model.weights, model.bias, options);
    std::vector<double> trial_w(model.weights.size());

    for (int it = 0; it < options.max_iterations; ++it) {
        logreg_gradient(X, model.weights, model.bias, options, grad_w, grad_b);
        double g_inf = std::fabs(grad_b);
        double g_sq = grad_b * grad_b;
        for (double g : grad_w) {
            g_inf = std::max(g_inf, std::fabs(g));
            g_sq += g * g;
        }
        model.final_grad_norm = g_inf;
        model.iterations = it;
        if (g_inf < options.tolerance) return model;

        // Backtracking line search along -gradient (Armijo, c = 1e-4):
        // accepted steps can only decrease the loss.
        double step = 1.0;
        for (;;) {
            for (std::size_t j = 0; j < trial_w.size(); ++j)
                trial_w[j] = model.weights[j] - step * grad_w[j];
            const double trial_b = model.bias - step * grad_b;
            const double trial_loss = logreg_loss(X, trial_w, trial_b, options);
            if (trial_loss <= loss - 1e-4 * step * g_sq) {
                model.weights.swap(trial_w);
                model.bias = trial_b;
                loss = trial_loss;
                break;
            }
            step *= 0.5;
            if (step < 1e-20) return model;  // no descent possible
        }
    }
    model.iterations = options.max_iterations;
    return model;
}

double predict_proba(const LogRegModel& model, const FeatureMatrix& X,
                     std::size_t row) {
    return sigmoid(row_margin(X, row, model.weights, model.bias));
}

FoldMetrics macro_metrics(const std::vector<int>& truth,
                          const std::vector<int>& predicted) {
    FoldMetrics metrics;
    for (int cls = 0; cls <= 1; ++cls) {
        double tp = 0, fp = 0, fn = 0;
        for (std::size_t i = 0; i < truth.size(); ++i) {
            const bool t = truth[i] == cls;
            const bool p = predicted[i] == cls;
            if (t && p) ++tp;
            if (!t && p) ++fp;
            if (t && !p) ++fn;
        }
        const double precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
        const double recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
        const double f1 = precision + recall > 0
                              ? 2.0 * precision * recall / (precision + recall)
                              : 0.0;
        metrics.macro_precision += precision / 2.0;
        metrics.macro_recall += recall / 2.0;
        metrics.macro_f1 += f1 / 2.0;
    }
    return metrics;
}

std::vector<std::vector<std::size_t>> stratified_folds(
    const std::vector<int>& labels, int k, std::uint64_t seed) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < labels.size(); ++i)
        (labels[i] == 1 ? pos : neg).push_back(i);
    const std::size_t min_class = std::min(pos.size(), neg.size());
    if (k < 2 || static_cast<std::size_t>(k) > min_class)
        throw DataError("cross_validate: k must be in [2, minority class count]");

    Rng64 rng(seed);
    fisher_yates(pos, rng);
    fisher_yates(neg, rng);
    std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < pos.size(); ++i)
        folds[i % static_cast<std::size_t>(k)].push_back(pos[i]);
    for (std::size_t i = 0; i < neg.size(); ++i)
        folds[i % static_cast<std::size_t>(k)].push_back(neg[i]);
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

CvReport cross_validate(const FeatureMatrix& X, int k, std::uint64_t seed,
                        const TrainOptions& options, int workers) {
    const auto folds = stratified_folds(X.labels, k, seed);

    CvReport report;
    report.seed = seed;
    report.folds.resize(static_cast<std::size_t>(k));
    parallel_blocks(
        static_cast<std::size_t>(k), 1, workers,
        [&](std::size_t f, std::size_t, std::size_t) {
            std::vector<std::size_t> train_rows;
            for (std::size_t g = 0; g < folds.size(); ++g)
                if (g != f)
                    train_rows.insert(train_rows.end(), folds[g].begin(),
                                      folds[g].end());
            std::sort(train_rows.begin(), train_rows.end());
            const FeatureMatrix train = select_rows(X, train_rows);
            const LogRegModel model = train_logreg(train, options);
            std::vector<int> truth, predicted;
            for (const std::size_t row : folds[f]) {
                truth.push_back(X.labels[row]);
                predicted.push_back(
                    predict_proba(model, X, row) >= 0.5 ? 1 : 0);
            }
            report.folds[f] = macro_metrics(truth, predicted);
        });

    for (const auto& fold : report.folds) {
        report.mean.macro_precision += fold.macro_precision / k;
        report.mean.macro_recall += fold.macro_recall / k;
        report.mean.macro_f1 += fold.macro_f1 / k;
    }
    return report;
}

std::vector<KeywordImportance> keyword_importance(const FeatureMatrix& X) {
    std::size_t n_pos = 0;
    for (int y : X.labels) n_pos += static_cast<std::size_t>(y);
    const std::size_t n_neg = X.n_rows() - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw DataError("keyword_importance: both classes must be present");

    std::vector<double> sum_pos(X.n_cols(), 0.0), sum_neg(X.n_cols(), 0.0);
    for (std::size_t i = 0; i < X.n_rows(); ++i) {
        auto& sums = X.labels[i] == 1 ? sum_pos : sum_neg;
        for (std::size_t k = X.row_ptr[i]; k < X.row_ptr[i + 1]; ++k)
            sums[static_cast<std::size_t>(X.cols[k])] += X.vals[k];
    }
    std::vector<KeywordImportance> ranked;
    ranked.reserve(X.n_cols());
    for (std::size_t j = 0; j < X.n_cols(); ++j) {
        KeywordImportance item;
        item.stem = X.terms[j];
        item.mean_accepted = sum_pos[j] / static_cast<double>(n_pos);
        item.mean_rejected = sum_neg[j] / static_cast<double>(n_neg);
        item.importance = item.mean_accepted - item.mean_rejected;
        ranked.push_back(std::move(item));
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const KeywordImportance& a, const KeywordImportance& b) {
                  if (a.importance != b.importance)
                      return a.importance > b.importance;
                  return a.stem < b.stem;
              });
    return ranked;
}

}  // namespace peerlens
