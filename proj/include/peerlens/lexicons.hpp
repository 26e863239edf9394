#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace peerlens {

enum class WordListTag {
    NdcCommon,
    GeneralScienceJargon,
    ScienceSpecificCommon,
    AiJargon,
    Stopwords,
};

struct WordList {
    std::unordered_set<std::string> words;
    WordListTag tag = WordListTag::Stopwords;

    bool contains(std::string_view w) const {
        return words.find(std::string(w)) != words.end();
    }
    std::size_t size() const { return words.size(); }
};

enum class NormKind {
    LogFrequency,
    Concreteness,
    AgeOfAcquisition,
};

// Word -> norm value. Keys are lowercase. LogFrequency values are stored as
// ln(1 + raw count), transformed at load time.
struct PsycholingLexicon {
    std::unordered_map<std::string, double> entries;
    NormKind kind = NormKind::LogFrequency;
    std::string source;

    std::optional<double> lookup(std::string_view word) const;
};

// One word per line, '#' comments and blank lines skipped, lowercased and
// deduplicated. Throws DataError if the file is missing or yields no words.
WordList load_wordlist(const std::filesystem::path& path, WordListTag tag);

struct LexiconLoadReport {
    std::size_t n_entries = 0;
    std::size_t n_skipped = 0;  // rows with a non-numeric value
};

// TSV `word<TAB>value`; an optional header line is detected by a non-numeric
// second field. Duplicate words keep the first occurrence.
PsycholingLexicon load_psycholing_lexicon(const std::filesystem::path& path,
                                          NormKind kind,
                                          LexiconLoadReport* report = nullptr);

std::string_view norm_kind_name(NormKind kind);

}  // namespace peerlens
