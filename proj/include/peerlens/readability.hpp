#pragma once

#include <string_view>

#include "peerlens/lexicons.hpp"
#include "peerlens/textprep.hpp"

namespace peerlens {

// Formula constants, pinned in one place and echoed into run metadata.
struct ReadabilityConstants {
    // Flesch Reading Ease: base - wps * (W/S) - spw * (Y/W)
    double fre_base = 206.835;
    double fre_words_per_sentence = 1.015;
    double fre_syllables_per_word = 84.6;
    // New Dale-Chall: difficult * (D/W) + wps * (W/S), plus `adjust`
    // when D/W exceeds `adjust_threshold`.
    double ndc_difficult = 15.79;
    double ndc_words_per_sentence = 0.0496;
    double ndc_adjust = 3.6365;
    double ndc_adjust_threshold = 0.05;
};

constexpr ReadabilityConstants kReadability{};

struct ReadabilityScores {
    double fre = 0.0;
    double ndc = 0.0;
    double jargon_general = 0.0;
    double jargon_science_specific = 0.0;
    double jargon_ai = 0.0;
    long n_words = 0;
    long n_sentences = 0;
    long n_syllables = 0;
    long n_difficult = 0;
};

// Words here are whitespace-delimited chunks containing at least one letter;
// stopwords are kept. Throws NoText when the text has no words.
double fre(std::string_view text);

// Difficult words are those whose lowercase letter form is absent from the
// common list. Throws NoText when the text has no words.
double ndc(std::string_view text, const WordList& common);

// Fraction of tokens present in the jargon list. Tokens must come from
// tokenize() without stopword removal and without stemming. Throws NoText
// on an empty stream.
double jargon_ratio(const TokenStream& tokens, const WordList& jargon);

// Full battery over one text section.
ReadabilityScores readability_scores(std::string_view text,
                                     const WordList& ndc_common,
                                     const WordList& jargon_general,
                                     const WordList& jargon_science_specific,
                                     const WordList& jargon_ai);

}  // namespace peerlens
