#include "peerlens/readability.hpp"

#include <string>

#include "peerlens/errors.hpp"

namespace peerlens {

namespace {

inline bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline char to_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}
inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

// Readability counts words as whitespace-delimited chunks with at least one
// letter; syllables sum over the chunk's alphabetic runs; the lookup key for
// the common-word list is the chunk's letters, lowercased.
struct WordCounts {
    long n_words = 0;
    long n_syllables = 0;
    long n_difficult = 0;
};

WordCounts scan_words(std::string_view text, const WordList* common) {
    WordCounts counts;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && is_space(text[i])) ++i;
        std::size_t begin = i;
        while (i < n && !is_space(text[i])) ++i;
        if (i == begin) break;
        std::string letters;
        long syllables = 0;
        std::string run;
        auto flush_run = [&] {
            if (!run.empty()) syllables += count_syllables(run);
            run.clear();
        };
        for (std::size_t k = begin; k < i; ++k) {
            const char c = text[k];
            if (is_alpha(c)) {
                run += to_lower(c);
                letters += to_lower(c);
            } else {
                flush_run();
            }
        }
        flush_run();
        if (letters.empty()) continue;  // numbers and bare punctuation
        ++counts.n_words;
        counts.n_syllables += syllables;
        if (common != nullptr && !common->contains(letters)) ++counts.n_difficult;
    }
    return counts;
}

}  // namespace

double fre(std::string_view text) {
    const WordCounts counts = scan_words(text, nullptr);
    if (counts.n_words == 0) throw NoText("fre: no words in text");
    const auto sentences = split_sentences(text);
    const double w = static_cast<double>(counts.n_words);
    const double s = static_cast<double>(sentences.empty() ? 1 : sentences.size());
    const double y = static_cast<double>(counts.n_syllables);
    return kReadability.fre_base - kReadability.fre_words_per_sentence * (w / s) -
           kReadability.fre_syllables_per_word * (y / w);
}

double ndc(std::string_view text, const WordList& common) {
    const WordCounts counts = scan_words(text, &common);
    if (counts.n_words == 0) throw NoText("ndc: no words in text");
    const auto sentences = split_sentences(text);
    const double w = static_cast<double>(counts.n_words);
    const double s = static_cast<double>(sentences.empty() ? 1 : sentences.size());
    const double difficult_fraction = static_cast<double>(counts.n_difficult) / w;
    double score = kReadability.ndc_difficult * difficult_fraction +
                   kReadability.ndc_words_per_sentence * (w / s);
    if (difficult_fraction > kReadability.ndc_adjust_threshold)
        score += kReadability.ndc_adjust;
    return score;
}

double jargon_ratio(const TokenStream& tokens, const WordList& jargon) {
    if (tokens.empty()) throw NoText("jargon_ratio: empty token stream");
    std::size_t hits = 0;
    for (const auto& t : tokens)
        if (jargon.contains(t)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

ReadabilityScores readability_scores(std::string_view text,
                                     const WordList& ndc_common,
                                     const WordList& jargon_general,
                                     const WordList& jargon_science_specific,
                                     const WordList& jargon_ai) {
    const WordCounts counts = scan_words(text, &ndc_common);
    if (counts.n_words == 0) throw NoText("readability: no words in text");
    const auto sentences = split_sentences(text);

    ReadabilityScores scores;
    scores.n_words = counts.n_words;
    scores.n_sentences = static_cast<long>(sentences.empty() ? 1 : sentences.size());
    scores.n_syllables = counts.n_syllables;
    scores.n_difficult = counts.n_difficult;
    scores.fre = fre(text);
    scores.ndc = ndc(text, ndc_common);

    // Jargon ratios run on unstemmed tokens with stopwords kept.
    TokenizeOptions options;
    options.drop_single_char = true;
    const TokenStream tokens = tokenize(text, options);
    if (!tokens.empty()) {
        scores.jargon_general = jargon_ratio(tokens, jargon_general);
        scores.jargon_science_specific =
            jargon_ratio(tokens, jargon_science_specific);
        scores.jargon_ai = jargon_ratio(tokens, jargon_ai);
    }
    return scores;
}

}  // namespace peerlens
