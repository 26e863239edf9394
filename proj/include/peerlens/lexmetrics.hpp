#pragma once

#include "peerlens/lexicons.hpp"
#include "peerlens/textprep.hpp"

namespace peerlens {

struct LexicalStats {
    long n_tokens = 0;
    long n_types = 0;
    double ttr = 0.0;  // n_types / n_tokens
};

// Expects tokens filtered for stopwords and single characters, unstemmed.
// Throws NoText on an empty stream.
LexicalStats lexical_stats(const TokenStream& tokens);

struct PsychAverages {
    double mean_over_tokens = 0.0;
    double mean_over_types = 0.0;
    double coverage = 0.0;  // fraction of token occurrences found in lexicon
};

// Means over token occurrences and over distinct types found in the lexicon;
// out-of-vocabulary words only lower coverage. Throws NoText on an empty
// stream and NoCoverage when nothing matches.
PsychAverages psych_averages(const TokenStream& tokens,
                             const PsycholingLexicon& lexicon);

}  // namespace peerlens
