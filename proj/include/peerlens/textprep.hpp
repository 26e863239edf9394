#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "peerlens/lexicons.hpp"

namespace peerlens {

using TokenStream = std::vector<std::string>;
using SentenceList = std::vector<std::string>;

// Splits on '.', '!' or '?' followed by whitespace or end of text. A period
// does not end a sentence when the word before it is a single letter ("J.")
// or a known abbreviation ("et al.", "fig."). Boundary delimiters are not
// part of the returned spans; blank spans are dropped.
SentenceList split_sentences(std::string_view text);

struct TokenizeOptions {
    bool drop_single_char = true;
    const WordList* stopwords = nullptr;  // optional
};

// Lowercases, splits on any non-alphanumeric character, and drops tokens
// containing digits (formula fragments and numbers carry no lexical signal
// here). Single-character tokens and stopwords go per options.
TokenStream tokenize(std::string_view text, const TokenizeOptions& options = {});

// Classic Porter (1980) suffix stripping, including the reference
// implementation's amendments (words of length <= 2 unchanged, step 2
// bli->ble and logi->log). Expects a lowercase word.
std::string porter_stem(std::string_view word);

// Maximal contiguous vowel groups (aeiouy), minus one for a trailing silent
// 'e' (a final consonant+"le" is not silent), floored at 1.
int count_syllables(std::string_view word);

// Stems every token in place.
TokenStream porter_stem_all(const TokenStream& tokens);

}  // namespace peerlens
