#include "peerlens/lexmetrics.hpp"

#include <unordered_map>
#include <unordered_set>

#include "peerlens/errors.hpp"

namespace peerlens {

LexicalStats lexical_stats(const TokenStream& tokens) {
    if (tokens.empty()) throw NoText("lexical_stats: empty token stream");
    std::unordered_set<std::string> types(tokens.begin(), tokens.end());
    LexicalStats stats;
    stats.n_tokens = static_cast<long>(tokens.size());
    stats.n_types = static_cast<long>(types.size());
    stats.ttr = static_cast<double>(stats.n_types) / static_cast<double>(stats.n_tokens);
    return stats;
}

PsychAverages psych_averages(const TokenStream& tokens,
                             const PsycholingLexicon& lexicon) {
    if (tokens.empty()) throw NoText("psych_averages: empty token stream");
    double token_sum = 0.0;
    std::size_t token_hits = 0;
    std::unordered_map<std::string, double> type_values;
    for (const auto& t : tokens) {
        const auto it = lexicon.entries.find(t);
        if (it == lexicon.entries.end()) continue;
        token_sum += it->second;
        ++token_hits;
        type_values.emplace(it->first, it->second);
    }
    if (token_hits == 0)
        throw NoCoverage("psych_averages: no token found in lexicon");
    double type_sum = 0.0;
    for (const auto& [word, value] : type_values) type_sum += value;

    PsychAverages averages;
    averages.mean_over_tokens = token_sum / static_cast<double>(token_hits);
    averages.mean_over_types = type_sum / static_cast<double>(type_values.size());
    averages.coverage =
        static_cast<double>(token_hits) / static_cast<double>(tokens.size());
    return averages;
}

}  // namespace peerlens
