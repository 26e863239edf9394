#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "peerlens/errors.hpp"
#include "peerlens/pipeline.hpp"

namespace {

using peerlens::RunConfig;
using peerlens::SectionKind;

void add_lexicon_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--stopwords", config.stopwords_path, "stopword list file");
    cmd->add_option("--ndc-common", config.ndc_common_path,
                    "common-word list for NDC");
    cmd->add_option("--jargon-general", config.jargon_general_path,
                    "general science jargon list");
    cmd->add_option("--jargon-science", config.jargon_science_path,
                    "science-specific common word list");
    cmd->add_option("--jargon-ai", config.jargon_ai_path, "AI jargon list");
    cmd->add_option("--norm-frequency", config.norm_frequency_path,
                    "word frequency norms (TSV, raw counts)");
    cmd->add_option("--norm-concreteness", config.norm_concreteness_path,
                    "concreteness norms (TSV)");
    cmd->add_option("--norm-aoa", config.norm_aoa_path,
                    "age-of-acquisition norms (TSV)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "peerlens: linguistic, semantic and bibliographic analysis of "
        "manuscript corpora with peer-review outcomes"};
    app.require_subcommand(1);

    RunConfig config;
    std::string section_choice = "all";

    app.add_option("--corpus", config.corpus_path, "JSON-Lines corpus file")
        ->required();
    app.add_option("--out", config.out_dir, "output directory")->required();
    app.add_option("--section", section_choice,
                   "section to analyse (title|abstract|introduction|all)")
        ->check(CLI::IsMember({"title", "abstract", "introduction", "all"}));
    app.add_option("--venue", config.venue_filter,
                   "restrict to one venue tag (e.g. arxiv_cl)");
    app.add_flag("--split-us", config.split_us,
                 "run comparisons separately for US / non-US manuscripts");
    app.add_option("--seed", config.seed, "random seed");
    app.add_option("--workers", config.workers,
                   "worker threads (0 = machine parallelism)");

    CLI::App* ingest = app.add_subcommand(
        "ingest", "validate the corpus and write its normalized form");
    CLI::App* summary =
        app.add_subcommand("summary", "per-venue paper and outcome counts");
    CLI::App* readability = app.add_subcommand(
        "readability", "FRE, NDC and jargon ratios per manuscript + comparison");
    CLI::App* lexical = app.add_subcommand(
        "lexical",
        "token/type counts, TTR and psycholinguistic averages + comparison");
    CLI::App* similarity = app.add_subcommand(
        "similarity", "pairwise tf-idf cosine similarity by outcome category");
    CLI::App* coupling = app.add_subcommand(
        "coupling",
        "bibliographic coupling (intersection, Jaccard) by outcome category");
    CLI::App* correlate = app.add_subcommand(
        "correlate", "correlation between cosine similarity and coupling");
    CLI::App* predict = app.add_subcommand(
        "predict",
        "bag-of-words logistic regression with cross-validated metrics");

    add_lexicon_flags(readability, config);
    add_lexicon_flags(lexical, config);
    add_lexicon_flags(similarity, config);
    add_lexicon_flags(correlate, config);
    add_lexicon_flags(predict, config);

    for (CLI::App* cmd : {similarity, correlate, predict})
        cmd->add_option("--min-df", config.min_df,
                        "minimum document frequency for the vocabulary");
    for (CLI::App* cmd : {coupling, correlate})
        cmd->add_option("--threshold", config.fuzzy_threshold,
                        "fuzzy matching threshold for reference grouping");
    predict->add_option("--folds", config.folds, "cross-validation folds");
    predict->add_option("--lambda", config.lambda, "L2 regularization strength");
    predict->add_flag("--balanced", config.balanced,
                      "reweight classes inversely to frequency");
    predict->add_option("--top", config.top_keywords,
                        "keywords per importance list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0
                   ? 0
                   : static_cast<int>(peerlens::ExitCode::Usage);
    }

    if (section_choice != "all") {
        SectionKind kind = SectionKind::Title;
        if (section_choice == "abstract") kind = SectionKind::Abstract;
        if (section_choice == "introduction") kind = SectionKind::Introduction;
        config.sections = {kind};
    }

    try {
        if (ingest->parsed()) peerlens::cmd_ingest(config);
        if (summary->parsed()) peerlens::cmd_summary(config);
        if (readability->parsed()) peerlens::cmd_readability(config);
        if (lexical->parsed()) peerlens::cmd_lexical(config);
        if (similarity->parsed()) peerlens::cmd_similarity(config);
        if (coupling->parsed()) peerlens::cmd_coupling(config);
        if (correlate->parsed()) peerlens::cmd_correlate(config);
        if (predict->parsed()) peerlens::cmd_predict(config);
    } catch (const peerlens::DegenerateInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(peerlens::ExitCode::Degenerate);
    } catch (const peerlens::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(peerlens::ExitCode::Data);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(peerlens::ExitCode::Data);
    }
    return static_cast<int>(peerlens::ExitCode::Ok);
}
