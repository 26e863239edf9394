#include "peerlens/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include <json.hpp>

#include "peerlens/csv.hpp"
#include "peerlens/errors.hpp"
#include "peerlens/lexmetrics.hpp"
#include "peerlens/parallel.hpp"
#include "peerlens/predict.hpp"
#include "peerlens/readability.hpp"
#include "peerlens/refmatch.hpp"
#include "peerlens/similarity.hpp"
#include "peerlens/stats.hpp"
#include "peerlens/textprep.hpp"

namespace peerlens {

namespace {

using nlohmann::json;

int clamp_workers(int workers) {
    return workers <= 0 ? default_workers() : workers;
}

struct WorkingCorpus {
    Corpus corpus;
    LoadReport report;
    std::vector<std::size_t> selected;  // indices after the venue filter
};

WorkingCorpus load_working(const RunConfig& config) {
    WorkingCorpus w;
    w.corpus = load_corpus(config.corpus_path, w.report);
    for (std::size_t i = 0; i < w.corpus.manuscripts.size(); ++i) {
        if (!config.venue_filter.empty() &&
            w.corpus.manuscripts[i].venue.tag != config.venue_filter)
            continue;
        w.selected.push_back(i);
    }
    if (w.selected.empty())
        throw DataError("no manuscripts selected from " +
                        config.corpus_path.string());
    return w;
}

std::string venue_label(const RunConfig& config) {
    return config.venue_filter.empty() ? "all" : config.venue_filter;
}

void write_run_meta(const RunConfig& config, const std::string& command) {
    json meta;
    meta["command"] = command;
    meta["corpus"] = config.corpus_path.string();
    meta["venue"] = venue_label(config);
    json sections = json::array();
    for (const auto s : config.sections) sections.push_back(section_name(s));
    meta["sections"] = sections;
    meta["split_us"] = config.split_us;
    meta["seed"] = config.seed;
    // worker count deliberately not echoed: outputs are byte-identical
    // across worker counts, and the metadata must be too
    meta["min_df"] = config.min_df;
    meta["fuzzy_threshold"] = config.fuzzy_threshold;
    meta["folds"] = config.folds;
    meta["lambda"] = config.lambda;
    meta["balanced"] = config.balanced;
    meta["top_keywords"] = config.top_keywords;
    meta["min_coverage"] = config.min_coverage;
    meta["constants"] = {
        {"fre_base", kReadability.fre_base},
        {"fre_words_per_sentence", kReadability.fre_words_per_sentence},
        {"fre_syllables_per_word", kReadability.fre_syllables_per_word},
        {"ndc_difficult", kReadability.ndc_difficult},
        {"ndc_words_per_sentence", kReadability.ndc_words_per_sentence},
        {"ndc_adjust", kReadability.ndc_adjust},
        {"ndc_adjust_threshold", kReadability.ndc_adjust_threshold},
        {"tfidf_variant", kTfIdfVariant},
        {"log_frequency_transform", "ln(1 + count)"},
        {"logreg", "mean logistic loss + (lambda/2n)||w||^2, gradient descent "
                   "with backtracking line search, tol 1e-6, max 1000 iters"},
    };
    json lexicons;
    lexicons["stopwords"] = config.stopwords_path.string();
    lexicons["ndc_common"] = config.ndc_common_path.string();
    lexicons["jargon_general"] = config.jargon_general_path.string();
    lexicons["jargon_science_specific"] = config.jargon_science_path.string();
    lexicons["jargon_ai"] = config.jargon_ai_path.string();
    lexicons["norm_frequency"] = config.norm_frequency_path.string();
    lexicons["norm_concreteness"] = config.norm_concreteness_path.string();
    lexicons["norm_aoa"] = config.norm_aoa_path.string();
    meta["lexicons"] = lexicons;

    std::ofstream out(config.out_dir / "run_meta.json", std::ios::binary);
    if (!out) throw DataError("cannot write run_meta.json");
    out << meta.dump(2) << '\n';
}

void prepare_out_dir(const RunConfig& config, const std::string& command) {
    std::filesystem::create_directories(config.out_dir);
    write_run_meta(config, command);
}

// ---- grouped comparisons -------------------------------------------------

const std::vector<std::string> kCompareHeader = {
    "venue", "section", "metric", "group", "n", "mean",
    "sem",   "t",       "p",      "eta_squared"};

// One row per group; t/p only for two-group comparisons; eta over all
// groups. Groups with fewer than two values carry no mean/sem and are
// dropped; a comparison needs at least two left (a zero-reference corpus
// yields an empty coupling comparison rather than an error). Zero-variance
// comparisons over real groups remain fatal (CLI exit code 4).
void write_comparison(CsvWriter& out, const std::string& venue,
                      const std::string& section, const std::string& metric,
                      const std::vector<std::pair<std::string, std::vector<double>>>& groups) {
    std::vector<std::pair<std::string, std::vector<double>>> usable;
    for (const auto& g : groups)
        if (g.second.size() >= 2) usable.push_back(g);
    if (usable.size() < 2) return;

    std::string t_field, p_field;
    std::vector<std::vector<double>> values;
    values.reserve(usable.size());
    for (const auto& [label, g] : usable) values.push_back(g);
    const std::string eta_field = format_double(eta_squared(values));
    if (usable.size() == 2) {
        const WelchResult welch = welch_t(values[0], values[1]);
        t_field = format_double(welch.t);
        p_field = format_double(welch.p_two_sided);
    }
    for (const auto& [label, g] : usable) {
        const MeanSem ms = mean_sem(g);
        out.row({venue, section, metric, label, std::to_string(g.size()),
                 format_double(ms.mean), format_double(ms.sem), t_field,
                 p_field, eta_field});
    }
}

// Accepted-vs-rejected comparison, optionally split by origin. `values`
// holds (origin, outcome, value) of known-outcome manuscripts.
void write_outcome_comparison(
    CsvWriter& out, const RunConfig& config, const std::string& section,
    const std::string& metric,
    const std::vector<std::tuple<OriginClass, Outcome, double>>& values) {
    const std::string venue = venue_label(config);
    if (!config.split_us) {
        std::vector<double> accepted, rejected;
        for (const auto& [origin, outcome, v] : values)
            (outcome == Outcome::Accepted ? accepted : rejected).push_back(v);
        write_comparison(out, venue, section, metric,
                         {{"accepted", accepted}, {"rejected", rejected}});
        return;
    }
    for (const OriginClass origin : {OriginClass::Us, OriginClass::NonUs}) {
        std::vector<double> accepted, rejected;
        for (const auto& [o, outcome, v] : values) {
            if (o != origin) continue;
            (outcome == Outcome::Accepted ? accepted : rejected).push_back(v);
        }
        const std::string prefix(origin_name(origin));
        write_comparison(out, venue, section, metric,
                         {{prefix + "_accepted", accepted},
                          {prefix + "_rejected", rejected}});
    }
}

// ---- shared preprocessing ------------------------------------------------

struct SectionDoc {
    std::size_t corpus_index = 0;
    const Manuscript* manuscript = nullptr;
    TokenStream stems;  // tokenized, stopword-filtered, Porter-stemmed
};

// Documents with a non-empty stemmed section, sorted by id (the canonical
// pair order). Unknown outcomes stay in; callers filter where needed.
// Documents that come up empty are excluded with a warning.
std::vector<SectionDoc> section_docs(const WorkingCorpus& w,
                                     SectionKind section,
                                     const WordList& stopwords) {
    std::vector<SectionDoc> docs;
    TokenizeOptions options;
    options.stopwords = &stopwords;
    std::size_t empty = 0;
    for (const std::size_t i : w.selected) {
        const Manuscript& m = w.corpus.manuscripts[i];
        TokenStream tokens = tokenize(section_text(m, section), options);
        if (tokens.empty()) {
            ++empty;
            continue;
        }
        SectionDoc doc;
        doc.corpus_index = i;
        doc.manuscript = &m;
        doc.stems = porter_stem_all(tokens);
        docs.push_back(std::move(doc));
    }
    std::sort(docs.begin(), docs.end(),
              [](const SectionDoc& a, const SectionDoc& b) {
                  return a.manuscript->id < b.manuscript->id;
              });
    if (empty > 0) {
        std::cerr << "warning: " << empty << " manuscript(s) with an empty "
                  << section_name(section) << " excluded\n";
    }
    return docs;
}

std::string pair_category_field(Outcome a, Outcome b) {
    if (a == Outcome::Unknown || b == Outcome::Unknown) return "unknown";
    return std::string(pair_category_name(categorize_pair(a, b)));
}

// Category -> values, collected in canonical pair order.
struct CategoryValues {
    std::vector<double> accepted, rejected, mixed;
    void add(const std::string& category, double value) {
        if (category == "accepted")
            accepted.push_back(value);
        else if (category == "rejected")
            rejected.push_back(value);
        else if (category == "mixed")
            mixed.push_back(value);
    }
    std::vector<std::pair<std::string, std::vector<double>>> groups() const {
        return {{"accepted", accepted}, {"mixed", mixed}, {"rejected", rejected}};
    }
};

}  // namespace

int effective_workers(const RunConfig& config) {
    return clamp_workers(config.workers);
}

// ---- ingest / summary ----------------------------------------------------

void cmd_ingest(const RunConfig& config) {
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "ingest");

    std::ofstream out(config.out_dir / "corpus_normalized.jsonl",
                      std::ios::binary);
    if (!out) throw DataError("cannot write corpus_normalized.jsonl");
    Corpus filtered;
    for (const std::size_t i : w.selected)
        filtered.manuscripts.push_back(w.corpus.manuscripts[i]);
    out << serialize_corpus(filtered);
    out.close();

    CsvWriter report(config.out_dir / "ingest_report.csv", {"metric", "value"});
    report.row({"n_loaded", std::to_string(w.report.n_loaded)});
    report.row({"n_skipped", std::to_string(w.report.n_skipped)});
    report.row({"n_selected", std::to_string(w.selected.size())});
    report.row({"n_warnings", std::to_string(w.report.warnings.size())});
    report.close();
}

void cmd_summary(const RunConfig& config) {
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "summary");
    Corpus filtered;
    for (const std::size_t i : w.selected)
        filtered.manuscripts.push_back(w.corpus.manuscripts[i]);
    CsvWriter out(config.out_dir / "summary.csv",
                  {"venue", "n_papers", "n_accepted", "n_rejected", "n_unknown"});
    for (const auto& row : corpus_summary(filtered)) {
        out.row({row.venue, std::to_string(row.n_papers),
                 std::to_string(row.n_accepted), std::to_string(row.n_rejected),
                 std::to_string(row.n_unknown)});
    }
    out.close();
}

// ---- readability ----------------------------------------------------------

void cmd_readability(const RunConfig& config) {
    const WordList ndc_common =
        load_wordlist(config.ndc_common_path, WordListTag::NdcCommon);
    const WordList jargon_general = load_wordlist(
        config.jargon_general_path, WordListTag::GeneralScienceJargon);
    const WordList jargon_science = load_wordlist(
        config.jargon_science_path, WordListTag::ScienceSpecificCommon);
    const WordList jargon_ai =
        load_wordlist(config.jargon_ai_path, WordListTag::AiJargon);
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "readability");

    CsvWriter per_ms(config.out_dir / "readability.csv",
                     {"id", "venue", "origin", "outcome", "section", "fre",
                      "ndc", "jargon_general", "jargon_science_specific",
                      "jargon_ai", "n_words", "n_sentences", "n_syllables",
                      "n_difficult"});
    CsvWriter compare(config.out_dir / "readability_compare.csv",
                      kCompareHeader);

    for (const SectionKind section : config.sections) {
        const std::string section_field(section_name(section));
        std::map<std::string, std::vector<std::tuple<OriginClass, Outcome, double>>>
            metric_values;
        for (const std::size_t i : w.selected) {
            const Manuscript& m = w.corpus.manuscripts[i];
            const std::string& text = section_text(m, section);
            ReadabilityScores scores;
            try {
                scores = readability_scores(text, ndc_common, jargon_general,
                                            jargon_science, jargon_ai);
            } catch (const NoText&) {
                continue;  // empty section: flagged at load, excluded here
            }
            const OriginClass origin = classify_origin(m);
            per_ms.row({m.id, m.venue.tag, std::string(origin_name(origin)),
                        std::string(outcome_name(m.outcome)), section_field,
                        format_double(scores.fre), format_double(scores.ndc),
                        format_double(scores.jargon_general),
                        format_double(scores.jargon_science_specific),
                        format_double(scores.jargon_ai),
                        std::to_string(scores.n_words),
                        std::to_string(scores.n_sentences),
                        std::to_string(scores.n_syllables),
                        std::to_string(scores.n_difficult)});
            if (m.outcome == Outcome::Unknown) continue;
            metric_values["fre"].emplace_back(origin, m.outcome, scores.fre);
            metric_values["ndc"].emplace_back(origin, m.outcome, scores.ndc);
            metric_values["jargon_general"].emplace_back(
                origin, m.outcome, scores.jargon_general);
            metric_values["jargon_science_specific"].emplace_back(
                origin, m.outcome, scores.jargon_science_specific);
            metric_values["jargon_ai"].emplace_back(origin, m.outcome,
                                                    scores.jargon_ai);
        }
        for (const char* metric :
             {"fre", "ndc", "jargon_general", "jargon_science_specific",
              "jargon_ai"}) {
            write_outcome_comparison(compare, config, section_field, metric,
                                     metric_values[metric]);
        }
    }
    per_ms.close();
    compare.close();
}

// ---- lexical ----------------------------------------------------------------

void cmd_lexical(const RunConfig& config) {
    const WordList stopwords =
        load_wordlist(config.stopwords_path, WordListTag::Stopwords);
    const PsycholingLexicon freq = load_psycholing_lexicon(
        config.norm_frequency_path, NormKind::LogFrequency);
    const PsycholingLexicon conc = load_psycholing_lexicon(
        config.norm_concreteness_path, NormKind::Concreteness);
    const PsycholingLexicon aoa = load_psycholing_lexicon(
        config.norm_aoa_path, NormKind::AgeOfAcquisition);
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "lexical");

    const std::vector<std::pair<std::string, const PsycholingLexicon*>> norms = {
        {"aoa", &aoa}, {"concreteness", &conc}, {"log_frequency", &freq}};

    CsvWriter per_ms(
        config.out_dir / "lexical.csv",
        {"id", "venue", "origin", "outcome", "section", "n_tokens", "n_types",
         "ttr", "aoa_mean_tokens", "aoa_mean_types", "aoa_coverage",
         "concreteness_mean_tokens", "concreteness_mean_types",
         "concreteness_coverage", "log_frequency_mean_tokens",
         "log_frequency_mean_types", "log_frequency_coverage"});
    CsvWriter compare(config.out_dir / "lexical_compare.csv", kCompareHeader);

    TokenizeOptions options;
    options.stopwords = &stopwords;

    std::size_t n_low_coverage = 0;
    for (const SectionKind section : config.sections) {
        const std::string section_field(section_name(section));
        std::map<std::string, std::vector<std::tuple<OriginClass, Outcome, double>>>
            metric_values;
        for (const std::size_t i : w.selected) {
            const Manuscript& m = w.corpus.manuscripts[i];
            const TokenStream tokens =
                tokenize(section_text(m, section), options);
            if (tokens.empty()) continue;
            const LexicalStats stats = lexical_stats(tokens);
            const OriginClass origin = classify_origin(m);

            std::vector<std::string> row = {
                m.id,
                m.venue.tag,
                std::string(origin_name(origin)),
                std::string(outcome_name(m.outcome)),
                section_field,
                std::to_string(stats.n_tokens),
                std::to_string(stats.n_types),
                format_double(stats.ttr)};
            const bool known = m.outcome != Outcome::Unknown;
            if (known) {
                metric_values["n_tokens"].emplace_back(
                    origin, m.outcome, static_cast<double>(stats.n_tokens));
                metric_values["n_types"].emplace_back(
                    origin, m.outcome, static_cast<double>(stats.n_types));
                metric_values["ttr"].emplace_back(origin, m.outcome, stats.ttr);
            }
            for (const auto& [name, lexicon] : norms) {
                std::optional<PsychAverages> averages;
                try {
                    averages = psych_averages(tokens, *lexicon);
                } catch (const NoCoverage&) {
                }
                if (averages) {
                    row.push_back(format_double(averages->mean_over_tokens));
                    row.push_back(format_double(averages->mean_over_types));
                    row.push_back(format_double(averages->coverage));
                } else {
                    row.push_back("");
                    row.push_back("");
                    row.push_back("0");
                }
                // below the coverage floor the averages are noise; keep the
                // row but leave it out of the comparison
                if (known && averages && averages->coverage >= config.min_coverage) {
                    metric_values[name + "_mean_tokens"].emplace_back(
                        origin, m.outcome, averages->mean_over_tokens);
                    metric_values[name + "_mean_types"].emplace_back(
                        origin, m.outcome, averages->mean_over_types);
                } else if (known) {
                    ++n_low_coverage;
                }
            }
            per_ms.row(row);
        }
        for (const auto& [metric, values] : metric_values)
            write_outcome_comparison(compare, config, section_field, metric,
                                     values);
    }
    if (n_low_coverage > 0) {
        std::cerr << "warning: " << n_low_coverage
                  << " section norm average(s) below coverage "
                  << format_double(config.min_coverage)
                  << " excluded from comparisons\n";
    }
    per_ms.close();
    compare.close();
}

// ---- similarity -------------------------------------------------------------

void cmd_similarity(const RunConfig& config) {
    const WordList stopwords =
        load_wordlist(config.stopwords_path, WordListTag::Stopwords);
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "similarity");
    const int workers = effective_workers(config);

    CsvWriter compare(config.out_dir / "similarity_compare.csv",
                      kCompareHeader);
    for (const SectionKind section : config.sections) {
        const std::string section_field(section_name(section));
        const std::vector<SectionDoc> docs =
            section_docs(w, section, stopwords);
        if (docs.size() < 2)
            throw DataError("similarity: fewer than two usable documents for " +
                            section_field);
        std::vector<TokenStream> stem_docs;
        stem_docs.reserve(docs.size());
        for (const auto& d : docs) stem_docs.push_back(d.stems);
        const TfIdfModel model = fit_tfidf(stem_docs, section, config.min_df);
        std::vector<DocVector> vectors;
        vectors.reserve(docs.size());
        for (const auto& d : docs) vectors.push_back(vectorize(model, d.stems));

        CsvWriter pairs(
            config.out_dir / ("similarity_pairs_" + section_field + ".csv"),
            {"id_a", "id_b", "cosine", "category"});
        CategoryValues categories;
        pairwise_similarity(
            vectors, workers, [&](const SimilarityPair& pair) {
                const Manuscript& a = *docs[pair.a].manuscript;
                const Manuscript& b = *docs[pair.b].manuscript;
                const std::string category =
                    pair_category_field(a.outcome, b.outcome);
                pairs.row({a.id, b.id, format_double(pair.cosine), category});
                categories.add(category, pair.cosine);
            });
        pairs.close();
        write_comparison(compare, venue_label(config), section_field, "cosine",
                         categories.groups());
    }
    compare.close();
}

// ---- coupling ---------------------------------------------------------------

namespace {

struct CouplingInputs {
    std::vector<std::size_t> order;          // selected indices sorted by id
    std::vector<std::vector<int>> group_sets;  // aligned with `order`
};

CouplingInputs coupling_inputs(const WorkingCorpus& w, const RunConfig& config,
                               int workers) {
    // Group references corpus-wide (over the working set), then collapse
    // each manuscript to its set of group ids.
    std::vector<ReferenceRecord> refs;
    for (const std::size_t i : w.selected) {
        const auto& m = w.corpus.manuscripts[i];
        refs.insert(refs.end(), m.references.begin(), m.references.end());
    }
    const std::vector<int> groups =
        group_references(refs, config.fuzzy_threshold, workers);

    CouplingInputs inputs;
    inputs.order = w.selected;
    std::sort(inputs.order.begin(), inputs.order.end(),
              [&](std::size_t a, std::size_t b) {
                  return w.corpus.manuscripts[a].id < w.corpus.manuscripts[b].id;
              });
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> spans;
    std::size_t offset = 0;
    for (const std::size_t i : w.selected) {
        const std::size_t count = w.corpus.manuscripts[i].references.size();
        spans[i] = {offset, offset + count};
        offset += count;
    }
    for (const std::size_t i : inputs.order) {
        std::set<int> ids;
        for (std::size_t k = spans[i].first; k < spans[i].second; ++k)
            ids.insert(groups[k]);
        inputs.group_sets.emplace_back(ids.begin(), ids.end());
    }
    return inputs;
}

}  // namespace

void cmd_coupling(const RunConfig& config) {
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "coupling");
    const int workers = effective_workers(config);
    const CouplingInputs inputs = coupling_inputs(w, config, workers);

    CsvWriter pairs(config.out_dir / "coupling_pairs.csv",
                    {"id_a", "id_b", "intersection", "jaccard", "category"});
    CategoryValues intersections, jaccards;
    CouplingHistogram histogram;
    coupling_table(
        inputs.group_sets, workers, histogram, [&](const CouplingPair& pair) {
            const Manuscript& a = w.corpus.manuscripts[inputs.order[pair.a]];
            const Manuscript& b = w.corpus.manuscripts[inputs.order[pair.b]];
            const std::string category =
                pair_category_field(a.outcome, b.outcome);
            pairs.row({a.id, b.id, std::to_string(pair.intersection),
                       format_double(pair.jaccard), category});
            intersections.add(category, static_cast<double>(pair.intersection));
            jaccards.add(category, pair.jaccard);
        });
    pairs.close();

    CsvWriter hist(config.out_dir / "coupling_histogram.csv",
                   {"intersection_bucket", "count"});
    const auto& buckets = CouplingHistogram::buckets();
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        std::string label;
        if (buckets[i].second < 0)
            label = std::to_string(buckets[i].first) + "+";
        else if (buckets[i].first == buckets[i].second)
            label = std::to_string(buckets[i].first);
        else
            label = std::to_string(buckets[i].first) + "-" +
                    std::to_string(buckets[i].second);
        hist.row({label, std::to_string(histogram.counts[i])});
    }
    hist.close();

    CsvWriter compare(config.out_dir / "coupling_compare.csv", kCompareHeader);
    write_comparison(compare, venue_label(config), "", "intersection",
                     intersections.groups());
    write_comparison(compare, venue_label(config), "", "jaccard",
                     jaccards.groups());
    compare.close();
}

// ---- correlate ---------------------------------------------------------------

void cmd_correlate(const RunConfig& config) {
    const WordList stopwords =
        load_wordlist(config.stopwords_path, WordListTag::Stopwords);
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "correlate");
    const int workers = effective_workers(config);
    const CouplingInputs inputs = coupling_inputs(w, config, workers);
    std::map<std::size_t, std::size_t> coupling_row;  // corpus idx -> row
    for (std::size_t r = 0; r < inputs.order.size(); ++r)
        coupling_row[inputs.order[r]] = r;

    CsvWriter out(config.out_dir / "correlation.csv",
                  {"section", "metric", "n_pairs", "pearson_r"});
    for (const SectionKind section : config.sections) {
        const std::string section_field(section_name(section));
        const std::vector<SectionDoc> docs =
            section_docs(w, section, stopwords);
        if (docs.size() < 2)
            throw DataError("correlate: fewer than two usable documents for " +
                            section_field);
        std::vector<TokenStream> stem_docs;
        stem_docs.reserve(docs.size());
        for (const auto& d : docs) stem_docs.push_back(d.stems);
        const TfIdfModel model = fit_tfidf(stem_docs, section, config.min_df);
        std::vector<DocVector> vectors;
        vectors.reserve(docs.size());
        for (const auto& d : docs) vectors.push_back(vectorize(model, d.stems));

        // Join on the pair: both vectors usable and intersection >= 1
        // ("shared at least one common reference").
        std::vector<double> cosines, inters, jaccs;
        pairwise_similarity(
            vectors, workers, [&](const SimilarityPair& pair) {
                const std::size_t ca = coupling_row[docs[pair.a].corpus_index];
                const std::size_t cb = coupling_row[docs[pair.b].corpus_index];
                const CouplingScore score =
                    coupling(inputs.group_sets[ca], inputs.group_sets[cb]);
                if (score.intersection < 1) return;
                cosines.push_back(pair.cosine);
                inters.push_back(static_cast<double>(score.intersection));
                jaccs.push_back(score.jaccard);
            });
        out.row({section_field, "cosine_vs_intersection",
                 std::to_string(cosines.size()),
                 format_double(pearson(cosines, inters))});
        out.row({section_field, "cosine_vs_jaccard",
                 std::to_string(cosines.size()),
                 format_double(pearson(cosines, jaccs))});
    }
    out.close();
}

// ---- predict ----------------------------------------------------------------

namespace {

struct PredictSlice {
    std::string venue;
    std::vector<const SectionDoc*> docs;
};

FeatureMatrix features_for(const std::vector<const SectionDoc*>& docs,
                           int min_df) {
    std::vector<TokenStream> stem_docs;
    std::vector<int> labels;
    std::vector<std::string> ids;
    stem_docs.reserve(docs.size());
    for (const auto* d : docs) {
        stem_docs.push_back(d->stems);
        labels.push_back(d->manuscript->outcome == Outcome::Accepted ? 1 : 0);
        ids.push_back(d->manuscript->id);
    }
    return build_features(stem_docs, labels, ids, min_df);
}

void write_importance(const RunConfig& config, SectionKind section,
                      const std::vector<KeywordImportance>& ranked) {
    const std::string section_field(section_name(section));
    const std::size_t top =
        std::min<std::size_t>(ranked.size(),
                              static_cast<std::size_t>(config.top_keywords));
    CsvWriter acc(config.out_dir /
                      ("importance_acceptance_" + section_field + ".csv"),
                  {"stem", "mean_acc", "mean_rej", "importance", "rank"});
    for (std::size_t i = 0; i < top; ++i) {
        const auto& item = ranked[i];
        acc.row({item.stem, format_double(item.mean_accepted),
                 format_double(item.mean_rejected),
                 format_double(item.importance), std::to_string(i + 1)});
    }
    acc.close();
    CsvWriter rej(config.out_dir /
                      ("importance_rejection_" + section_field + ".csv"),
                  {"stem", "mean_acc", "mean_rej", "importance", "rank"});
    for (std::size_t i = 0; i < top; ++i) {
        const auto& item = ranked[ranked.size() - 1 - i];
        rej.row({item.stem, format_double(item.mean_accepted),
                 format_double(item.mean_rejected),
                 format_double(item.importance), std::to_string(i + 1)});
    }
    rej.close();
}

}  // namespace

void cmd_predict(const RunConfig& config) {
    const WordList stopwords =
        load_wordlist(config.stopwords_path, WordListTag::Stopwords);
    const WorkingCorpus w = load_working(config);
    prepare_out_dir(config, "predict");
    const int workers = effective_workers(config);

    TrainOptions options;
    options.lambda = config.lambda;
    options.balanced = config.balanced;

    CsvWriter report(config.out_dir / "prediction_cv.csv",
                     {"venue", "section", "fold", "macro_precision",
                      "macro_recall", "macro_f1"});
    for (const SectionKind section : config.sections) {
        const std::string section_field(section_name(section));
        std::vector<SectionDoc> docs = section_docs(w, section, stopwords);
        std::vector<const SectionDoc*> labeled;
        for (const auto& d : docs)
            if (d.manuscript->outcome != Outcome::Unknown)
                labeled.push_back(&d);

        // Pooled slice first, then per-venue slices that meet the
        // preconditions on their own.
        std::vector<PredictSlice> slices;
        slices.push_back({venue_label(config), labeled});
        if (config.venue_filter.empty()) {
            std::map<std::string, std::vector<const SectionDoc*>> by_venue;
            for (const auto* d : labeled)
                by_venue[d->manuscript->venue.tag].push_back(d);
            if (by_venue.size() > 1)
                for (auto& [tag, docs_v] : by_venue)
                    slices.push_back({tag, docs_v});
        }

        for (std::size_t s = 0; s < slices.size(); ++s) {
            const auto& slice = slices[s];
            std::size_t n_acc = 0;
            for (const auto* d : slice.docs)
                n_acc += d->manuscript->outcome == Outcome::Accepted ? 1 : 0;
            const std::size_t n_rej = slice.docs.size() - n_acc;
            const std::size_t min_class = std::min(n_acc, n_rej);
            const bool usable = slice.docs.size() >= 10 && n_acc > 0 &&
                                n_rej > 0 &&
                                static_cast<std::size_t>(config.folds) <=
                                    min_class;
            if (!usable) {
                if (s == 0)
                    throw DataError(
                        "predict: need >= 10 labeled manuscripts, both "
                        "classes, and folds <= minority class count");
                continue;  // per-venue slice too small: skipped
            }
            const FeatureMatrix X =
                features_for(slice.docs, config.min_df);
            const CvReport cv =
                cross_validate(X, config.folds, config.seed, options, workers);
            for (std::size_t f = 0; f < cv.folds.size(); ++f) {
                report.row({slice.venue, section_field, std::to_string(f + 1),
                            format_double(cv.folds[f].macro_precision),
                            format_double(cv.folds[f].macro_recall),
                            format_double(cv.folds[f].macro_f1)});
            }
            report.row({slice.venue, section_field, "mean",
                        format_double(cv.mean.macro_precision),
                        format_double(cv.mean.macro_recall),
                        format_double(cv.mean.macro_f1)});
            if (s == 0) write_importance(config, section, keyword_importance(X));
        }
    }
    report.close();
}

}  // namespace peerlens
