#include "peerlens/lexicons.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "peerlens/errors.hpp"

namespace peerlens {

namespace {

std::string lower_trimmed(std::string_view s) {
    std::size_t b = 0, e = s.size();
    auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    };
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    std::string out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) {
        char c = s[i];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        out += c;
    }
    return out;
}

bool parse_number(std::string_view s, double& out) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

std::optional<double> PsycholingLexicon::lookup(std::string_view word) const {
    const auto it = entries.find(lower_trimmed(word));
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

WordList load_wordlist(const std::filesystem::path& path, WordListTag tag) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open word list: " + path.string());
    WordList list;
    list.tag = tag;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::string w = lower_trimmed(line);
        if (!w.empty()) list.words.insert(std::move(w));
    }
    if (list.words.empty())
        throw DataError("word list is empty: " + path.string());
    return list;
}

PsycholingLexicon load_psycholing_lexicon(const std::filesystem::path& path,
                                          NormKind kind,
                                          LexiconLoadReport* report) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open lexicon: " + path.string());
    PsycholingLexicon lex;
    lex.kind = kind;
    lex.source = path.string();
    LexiconLoadReport local;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            ++local.n_skipped;
            continue;
        }
        const std::string word = lower_trimmed(line.substr(0, tab));
        double value = 0.0;
        if (word.empty() || !parse_number(lower_trimmed(line.substr(tab + 1)), value)) {
            // a non-numeric second field on the first line is a header
            if (!first) ++local.n_skipped;
            first = false;
            continue;
        }
        first = false;
        if (kind == NormKind::LogFrequency) value = std::log1p(value);
        lex.entries.emplace(word, value);  // first occurrence wins
    }
    if (lex.entries.empty())
        throw DataError("lexicon is empty: " + path.string());
    local.n_entries = lex.entries.size();
    if (report) *report = local;
    return lex;
}

std::string_view norm_kind_name(NormKind kind) {
    switch (kind) {
        case NormKind::LogFrequency: return "log_frequency";
        case NormKind::Concreteness: return "concreteness";
        case NormKind::AgeOfAcquisition: return "aoa";
    }
    return "unknown";
}

}  // namespace peerlens
