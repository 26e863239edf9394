#include "peerlens/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "peerlens/errors.hpp"
#include "peerlens/parallel.hpp"

namespace peerlens {

TfIdfModel fit_tfidf(const std::vector<TokenStream>& stem_docs,
                     SectionKind section, int min_df) {
    if (stem_docs.size() < 2)
        throw DataError("fit_tfidf: need at least two usable documents");
    // Document frequencies; the map keeps term order deterministic.
    std::map<std::string, int> df;
    for (const auto& doc : stem_docs) {
        std::map<std::string, int> seen;
        for (const auto& stem : doc) seen.emplace(stem, 1);
        for (const auto& [stem, one] : seen) df[stem] += one;
    }
    TfIdfModel model;
    model.section = section;
    model.min_df = min_df;
    model.n_docs = stem_docs.size();
    const double n = static_cast<double>(model.n_docs);
    for (const auto& [stem, count] : df) {
        if (count < min_df) continue;
        const int index = static_cast<int>(model.terms.size());
        model.vocabulary.emplace(stem, index);
        model.terms.push_back(stem);
        model.idf.push_back(std::log((1.0 + n) / (1.0 + count)) + 1.0);
    }
    return model;
}

DocVector vectorize(const TfIdfModel& model, const TokenStream& stems) {
    std::map<int, double> counts;
    for (const auto& stem : stems) {
        const auto it = model.vocabulary.find(stem);
        if (it == model.vocabulary.end()) continue;
        counts[it->second] += 1.0;
    }
    DocVector v;
    if (counts.empty()) return v;  // Empty: every stem out of vocabulary
    double norm_sq = 0.0;
    v.entries.reserve(counts.size());
    for (const auto& [index, count] : counts) {
        const double w = count * model.idf[static_cast<std::size_t>(index)];
        v.entries.emplace_back(index, w);
        norm_sq += w * w;
    }
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    for (auto& [index, weight] : v.entries) weight *= inv_norm;
    return v;
}

double cosine(const DocVector& u, const DocVector& v) {
    if (u.empty() || v.empty())
        throw DegenerateInput("cosine: empty document vector");
    double dot = 0.0;
    auto iu = u.entries.begin();
    auto iv = v.entries.begin();
    while (iu != u.entries.end() && iv != v.entries.end()) {
        if (iu->first < iv->first) {
            ++iu;
        } else if (iv->first < iu->first) {
            ++iv;
        } else {
            dot += iu->second * iv->second;
            ++iu;
            ++iv;
        }
    }
    return dot;
}

PairCategory categorize_pair(Outcome a, Outcome b) {
    if (a == Outcome::Unknown || b == Outcome::Unknown)
        throw DegenerateInput("categorize_pair: unknown outcome");
    if (a == Outcome::Accepted && b == Outcome::Accepted)
        return PairCategory::AcceptedPair;
    if (a == Outcome::Rejected && b == Outcome::Rejected)
        return PairCategory::RejectedPair;
    return PairCategory::MixedPair;
}

std::string_view pair_category_name(PairCategory cat) {
    switch (cat) {
        case PairCategory::AcceptedPair: return "accepted";
        case PairCategory::RejectedPair: return "rejected";
        case PairCategory::MixedPair: return "mixed";
    }
    return "mixed";
}

std::size_t pairwise_similarity(
    const std::vector<DocVector>& vectors, int workers,
    const std::function<void(const SimilarityPair&)>& sink) {
    const std::size_t n = vectors.size();
    // Row blocks: rows i pair with all j > i. Blocks are produced in
    // parallel and consumed in block order, so the stream is canonical and
    // never accumulates in memory.
    constexpr std::size_t kRowBlock = 64;
    const std::size_t n_blocks = n == 0 ? 0 : (n + kRowBlock - 1) / kRowBlock;
    ordered_blocks<std::vector<SimilarityPair>>(
        n_blocks, workers,
        [&](std::size_t block) {
            std::vector<SimilarityPair> buffer;
            const std::size_t begin = block * kRowBlock;
            const std::size_t end = std::min(n, begin + kRowBlock);
            for (std::size_t i = begin; i < end; ++i) {
                if (vectors[i].empty()) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (vectors[j].empty()) continue;
                    buffer.push_back(
                        SimilarityPair{i, j, cosine(vectors[i], vectors[j])});
                }
            }
            return buffer;
        },
        [&](std::size_t, std::vector<SimilarityPair>&& buffer) {
            for (const auto& pair : buffer) sink(pair);
        });
    std::size_t empty_docs = 0;
    for (const auto& v : vectors)
        if (v.empty()) ++empty_docs;
    // Pairs lost to Empty vectors: each empty doc would pair with every
    // other doc exactly once.
    return empty_docs * (n - 1) - empty_docs * (empty_docs - 1) / 2;
}

}  // namespace peerlens
