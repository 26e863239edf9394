#include "peerlens/textprep.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace peerlens {

namespace {

inline bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }
inline char to_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}
inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

// Tokens that do not end a sentence when followed by a period.
const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> kAbbrev = {
        "mr",  "mrs",  "ms",  "dr",   "prof", "fig", "figs", "eq",  "eqs",
        "sec", "secs", "no",  "al",   "et",   "vs",  "etc",  "cf",  "eg",
        "ie",  "resp", "ref", "refs", "vol",  "pp",  "st",   "jr",  "sr",
        "inc", "ltd",  "univ", "dept", "approx",
    };
    return kAbbrev;
}

// The maximal run of letters immediately before position `i` (exclusive),
// lowercased.
std::string word_before(std::string_view text, std::size_t i) {
    std::size_t end = i;
    std::size_t begin = end;
    while (begin > 0 && is_alpha(text[begin - 1])) --begin;
    std::string w;
    w.reserve(end - begin);
    for (std::size_t k = begin; k < end; ++k) w += to_lower(text[k]);
    return w;
}

std::string trimmed(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

SentenceList split_sentences(std::string_view text) {
    SentenceList sentences;
    std::string current;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto flush = [&] {
        std::string s = trimmed(current);
        if (!s.empty()) sentences.push_back(std::move(s));
        current.clear();
    };
    while (i < n) {
        const char c = text[i];
        if (c == '!' || c == '?' ||
            (c == '.' && (i + 1 == n || is_space(text[i + 1])))) {
            bool boundary = true;
            if (c == '.') {
                const std::string w = word_before(text, i);
                if (w.size() == 1 || abbreviations().count(w)) boundary = false;
            }
            if (boundary) {
                flush();
                // swallow runs of terminal punctuation ("?!", "...")
                while (i < n && (text[i] == '.' || text[i] == '!' || text[i] == '?'))
                    ++i;
                continue;
            }
        }
        current += c;
        ++i;
    }
    flush();
    return sentences;
}

TokenStream tokenize(std::string_view text, const TokenizeOptions& options) {
    TokenStream tokens;
    std::string current;
    bool has_digit = false;
    auto flush = [&] {
        if (!current.empty() && !has_digit &&
            (!options.drop_single_char || current.size() >= 2) &&
            (options.stopwords == nullptr || !options.stopwords->contains(current))) {
            tokens.push_back(current);
        }
        current.clear();
        has_digit = false;
    };
    for (char c : text) {
        if (is_alnum(c)) {
            if (is_digit(c)) has_digit = true;
            current += to_lower(c);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

int count_syllables(std::string_view word) {
    auto is_vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' ||
               c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : word) {
        if (is_vowel(to_lower(c))) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    const std::size_t n = word.size();
    if (n >= 2 && to_lower(word[n - 1]) == 'e') {
        const char prev = to_lower(word[n - 2]);
        const bool consonant_le =
            prev == 'l' && n >= 3 && !is_vowel(to_lower(word[n - 3]));
        if (!is_vowel(prev) && !consonant_le) --groups;
    }
    return std::max(1, groups);
}

TokenStream porter_stem_all(const TokenStream& tokens) {
    TokenStream stems;
    stems.reserve(tokens.size());
    for (const auto& t : tokens) stems.push_back(porter_stem(t));
    return stems;
}

}  // namespace peerlens
