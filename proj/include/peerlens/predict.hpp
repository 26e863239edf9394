#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "peerlens/similarity.hpp"

namespace peerlens {

// Row-sparse tf-idf features over manuscripts with a known outcome.
struct FeatureMatrix {
    std::vector<std::size_t> row_ptr{0};
    std::vector<int> cols;
    std::vector<double> vals;
    std::vector<int> labels;  // 1 = accepted
    std::vector<std::string> row_ids;
    std::vector<std::string> terms;  // column index -> stem

    std::size_t n_rows() const { return row_ptr.size() - 1; }
    std::size_t n_cols() const { return terms.size(); }
    void add_row(const DocVector& v, int label, std::string id);
};

// tf-idf features over stemmed documents with known outcomes (1 =
// accepted). The vocabulary and idf come from a model fitted on exactly
// these documents. Throws DataError when only one class is present; the
// caller is responsible for supplying enough documents (>= 10) for the
// downstream statistics to mean anything.
FeatureMatrix build_features(const std::vector<TokenStream>& stem_docs,
                             const std::vector<int>& labels,
                             const std::vector<std::string>& ids,
                             int min_df = 1);

struct LogRegModel {
    std::vector<double> weights;
    double bias = 0.0;
    double lambda = 1.0;
    int iterations = 0;
    double final_grad_norm = 0.0;
};

struct TrainOptions {
    double lambda = 1.0;
    int max_iterations = 1000;
    double tolerance = 1e-6;  // infinity norm of the gradient
    bool balanced = false;    // reweight classes inversely to frequency
};

// Mean logistic loss + (lambda / 2n) ||w||^2, minimized by full-batch
// gradient descent with backtracking line search from zero weights.
// Deterministic; throws DataError on non-finite features or a single-class
// label vector.
LogRegModel train_logreg(const FeatureMatrix& X, const TrainOptions& options = {});

double predict_proba(const LogRegModel& model, const FeatureMatrix& X,
                     std::size_t row);

// Loss and gradient at (weights, bias); exposed for the finite-difference
// checks.
double logreg_loss(const FeatureMatrix& X, const std::vector<double>& weights,
                   double bias, const TrainOptions& options);
void logreg_gradient(const FeatureMatrix& X, const std::vector<double>& weights,
                     double bias, const TrainOptions& options,
                     std::vector<double>& grad_w, double& grad_b);

struct FoldMetrics {
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
};

struct CvReport {
    std::vector<FoldMetrics> folds;
    FoldMetrics mean;
    std::uint64_t seed = 0;
};

// Stratified fold assignment: per-class indices are shuffled with a pinned
// Fisher-Yates (so results do not depend on the standard library) and dealt
// round-robin. Folds partition [0, n) and per-fold class counts stay within
// one of the stratified target. Throws DataError when k exceeds the
// minority class count.
std::vector<std::vector<std::size_t>> stratified_folds(
    const std::vector<int>& labels, int k, std::uint64_t seed);

// Folds train in parallel and merge in fold order.
CvReport cross_validate(const FeatureMatrix& X, int k, std::uint64_t seed,
                        const TrainOptions& options = {}, int workers = 1);

FoldMetrics macro_metrics(const std::vector<int>& truth,
                          const std::vector<int>& predicted);

struct KeywordImportance {
    std::string stem;
    double mean_accepted = 0.0;
    double mean_rejected = 0.0;
    double importance = 0.0;  // mean_accepted - mean_rejected
};

// Per-stem mean tf-idf weight over accepted minus over rejected documents
// (absent stems contribute zero). Sorted by importance descending, ties by
// stem. Requires both classes present.
std::vector<KeywordImportance> keyword_importance(const FeatureMatrix& X);

}  // namespace peerlens
