#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "peerlens/corpus.hpp"
#include "peerlens/textprep.hpp"

namespace peerlens {

// tf-idf variant: raw term count x smoothed idf ln((1+N)/(1+df)) + 1, then
// L2 normalization. Pinned here; echoed into run metadata.
inline constexpr const char* kTfIdfVariant =
    "count * (ln((1+N)/(1+df)) + 1), L2-normalized";

struct TfIdfModel {
    std::map<std::string, int> vocabulary;  // stem -> dense column index
    std::vector<std::string> terms;         // column index -> stem
    std::vector<double> idf;
    std::size_t n_docs = 0;
    SectionKind section = SectionKind::Title;
    int min_df = 1;
};

// Sparse L2-normalized document vector; entries sorted by column index.
// `empty()` marks documents whose stems were all out of vocabulary.
struct DocVector {
    std::vector<std::pair<int, double>> entries;
    bool empty() const { return entries.empty(); }
};

// Fits vocabulary and idf over stemmed token documents. Documents that are
// empty after preprocessing must be excluded by the caller (they do not
// count toward N). Throws DataError when fewer than two usable documents
// remain.
TfIdfModel fit_tfidf(const std::vector<TokenStream>& stem_docs,
                     SectionKind section, int min_df = 1);

DocVector vectorize(const TfIdfModel& model, const TokenStream& stems);

// Dot product of two pre-normalized vectors. Throws DegenerateInput when
// either vector is Empty.
double cosine(const DocVector& u, const DocVector& v);

enum class PairCategory { AcceptedPair, RejectedPair, MixedPair };

// Both outcomes must be known; throws DegenerateInput on Unknown.
PairCategory categorize_pair(Outcome a, Outcome b);

std::string_view pair_category_name(PairCategory cat);

struct SimilarityPair {
    std::size_t a = 0;  // indices into the caller's document arrays
    std::size_t b = 0;
    double cosine = 0.0;
};

// Streams all unordered pairs of non-Empty documents in canonical order
// (row-major over the caller's ordering, which should be sorted by id).
// Pair blocks are computed in parallel; the sink is invoked sequentially.
// Returns the number of pairs skipped because a vector was Empty.
std::size_t pairwise_similarity(
    const std::vector<DocVector>& vectors, int workers,
    const std::function<void(const SimilarityPair&)>& sink);

}  // namespace peerlens
