#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "peerlens/corpus.hpp"

namespace peerlens {

// Everything a command run depends on. Echoed into run_meta.json so every
// output directory is self-describing.
struct RunConfig {
    std::filesystem::path corpus_path;
    std::filesystem::path out_dir;
    std::vector<SectionKind> sections{SectionKind::Title, SectionKind::Abstract,
                                      SectionKind::Introduction};
    std::string venue_filter;  // empty = all venues
    bool split_us = false;

    std::filesystem::path stopwords_path;
    std::filesystem::path ndc_common_path;
    std::filesystem::path jargon_general_path;
    std::filesystem::path jargon_science_path;
    std::filesystem::path jargon_ai_path;
    std::filesystem::path norm_frequency_path;
    std::filesystem::path norm_concreteness_path;
    std::filesystem::path norm_aoa_path;

    int min_df = 1;
    double fuzzy_threshold = 0.7;
    int folds = 10;
    double lambda = 1.0;
    bool balanced = false;
    int top_keywords = 50;
    double min_coverage = 0.5;
    std::uint64_t seed = 42;
    int workers = 0;  // 0 = machine parallelism
};

int effective_workers(const RunConfig& config);

// Subcommands. Each validates its inputs, writes its CSVs plus
// run_meta.json under config.out_dir, and throws on error (the CLI maps
// exceptions to exit codes).
void cmd_ingest(const RunConfig& config);
void cmd_summary(const RunConfig& config);
void cmd_readability(const RunConfig& config);
void cmd_lexical(const RunConfig& config);
void cmd_similarity(const RunConfig& config);
void cmd_coupling(const RunConfig& config);
void cmd_correlate(const RunConfig& config);
void cmd_predict(const RunConfig& config);

}  // namespace peerlens
