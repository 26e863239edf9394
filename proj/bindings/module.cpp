#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "peerlens/corpus.hpp"
#include "peerlens/lexicons.hpp"
#include "peerlens/lexmetrics.hpp"
#include "peerlens/predict.hpp"
#include "peerlens/readability.hpp"
#include "peerlens/refmatch.hpp"
#include "peerlens/similarity.hpp"
#include "peerlens/stats.hpp"
#include "peerlens/textprep.hpp"

namespace py = pybind11;
using namespace peerlens;

namespace {

WordList list_from(const std::vector<std::string>& words, WordListTag tag) {
    WordList list;
    list.tag = tag;
    for (const auto& w : words) list.words.insert(w);
    return list;
}

TokenStream tokenize_py(const std::string& text, bool drop_single_char,
                        const std::optional<std::vector<std::string>>& stopwords) {
    TokenizeOptions options;
    options.drop_single_char = drop_single_char;
    WordList stop;
    if (stopwords) {
        stop = list_from(*stopwords, WordListTag::Stopwords);
        options.stopwords = &stop;
    }
    return tokenize(text, options);
}

// Thin wrapper so python callers can fit once and score many documents.
struct PyTfIdf {
    TfIdfModel model;

    PyTfIdf(const std::vector<TokenStream>& docs, int min_df)
        : model(fit_tfidf(docs, SectionKind::Title, min_df)) {}

    std::vector<std::pair<int, double>> transform(const TokenStream& stems) const {
        return vectorize(model, stems).entries;
    }
    double cosine_between(const TokenStream& a, const TokenStream& b) const {
        return cosine(vectorize(model, a), vectorize(model, b));
    }
    std::map<std::string, int> vocabulary() const { return model.vocabulary; }
    std::vector<double> idf() const { return model.idf; }
};

FeatureMatrix matrix_from(const std::vector<TokenStream>& docs,
                          const std::vector<int>& labels, int min_df) {
    std::vector<std::string> ids;
    ids.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) ids.push_back(std::to_string(i));
    return build_features(docs, labels, ids, min_df);
}

py::dict cross_validate_py(const std::vector<TokenStream>& docs,
                           const std::vector<int>& labels, int k,
                           std::uint64_t seed, double lambda, bool balanced,
                           int min_df) {
    TrainOptions options;
    options.lambda = lambda;
    options.balanced = balanced;
    const CvReport report =
        cross_validate(matrix_from(docs, labels, min_df), k, seed, options);
    py::list folds;
    for (const auto& f : report.folds) {
        py::dict fold;
        fold["macro_precision"] = f.macro_precision;
        fold["macro_recall"] = f.macro_recall;
        fold["macro_f1"] = f.macro_f1;
        folds.append(fold);
    }
    py::dict out;
    out["folds"] = folds;
    out["mean_macro_precision"] = report.mean.macro_precision;
    out["mean_macro_recall"] = report.mean.macro_recall;
    out["mean_macro_f1"] = report.mean.macro_f1;
    out["seed"] = report.seed;
    return out;
}

py::list keyword_importance_py(const std::vector<TokenStream>& docs,
                               const std::vector<int>& labels, int min_df) {
    py::list out;
    for (const auto& item :
         keyword_importance(matrix_from(docs, labels, min_df))) {
        py::dict row;
        row["stem"] = item.stem;
        row["mean_accepted"] = item.mean_accepted;
        row["mean_rejected"] = item.mean_rejected;
        row["importance"] = item.importance;
        out.append(row);
    }
    return out;
}

py::list corpus_summary_py(const std::string& path) {
    LoadReport report;
    const Corpus corpus = load_corpus(path, report);
    py::list out;
    for (const auto& row : corpus_summary(corpus)) {
        py::dict r;
        r["venue"] = row.venue;
        r["n_papers"] = row.n_papers;
        r["n_accepted"] = row.n_accepted;
        r["n_rejected"] = row.n_rejected;
        r["n_unknown"] = row.n_unknown;
        out.append(r);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Core operations: text preprocessing, readability, fuzzy "
              "reference matching, tf-idf similarity, statistics and "
              "bag-of-words outcome prediction.";

    m.def("porter_stem", &porter_stem, py::arg("word"),
          "Porter stem of a lowercase word.");
    m.def("count_syllables", &count_syllables, py::arg("word"),
          "Vowel-group syllable estimate with the silent-e rule.");
    m.def("split_sentences", &split_sentences, py::arg("text"));
    m.def("tokenize", &tokenize_py, py::arg("text"),
          py::arg("drop_single_char") = true,
          py::arg("stopwords") = std::nullopt,
          "Lowercased alphabetic tokens; digit-bearing tokens are dropped.");

    m.def(
        "fre", [](const std::string& text) { return fre(text); },
        py::arg("text"), "Flesch Reading Ease.");
    m.def(
        "ndc",
        [](const std::string& text, const std::vector<std::string>& common) {
            return ndc(text, list_from(common, WordListTag::NdcCommon));
        },
        py::arg("text"), py::arg("common_words"),
        "New Dale-Chall score against a common-word list.");
    m.def(
        "jargon_ratio",
        [](const TokenStream& tokens, const std::vector<std::string>& jargon) {
            return jargon_ratio(tokens,
                                list_from(jargon, WordListTag::AiJargon));
        },
        py::arg("tokens"), py::arg("jargon"));

    m.def("token_set_ratio", &token_set_ratio, py::arg("a"), py::arg("b"),
          "Token-set fuzzy similarity in [0, 1].");
    m.def("indel_distance", &indel_distance, py::arg("a"), py::arg("b"));

    py::class_<ReferenceRecord>(m, "ReferenceRecord")
        .def(py::init([](int year, std::vector<std::string> authors,
                         std::string title) {
                 ReferenceRecord r;
                 r.year = year;
                 r.authors = std::move(authors);
                 r.title = std::move(title);
                 return r;
             }),
             py::arg("year"), py::arg("authors"), py::arg("title"))
        .def_readwrite("year", &ReferenceRecord::year)
        .def_readwrite("authors", &ReferenceRecord::authors)
        .def_readwrite("title", &ReferenceRecord::title);

    m.def("match_references", &match_references, py::arg("r1"), py::arg("r2"),
          py::arg("threshold") = 0.7);
    m.def("group_references", &group_references, py::arg("references"),
          py::arg("threshold") = 0.7, py::arg("workers") = 1,
          "Dense group ids under the four-condition fuzzy match.");
    m.def(
        "coupling",
        [](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> sa(a), sb(b);
            std::sort(sa.begin(), sa.end());
            sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
            std::sort(sb.begin(), sb.end());
            sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
            const CouplingScore s = coupling(sa, sb);
            return py::make_tuple(s.intersection, s.jaccard);
        },
        py::arg("groups_a"), py::arg("groups_b"),
        "(intersection, jaccard) over two group-id collections.");

    m.def(
        "lexical_stats",
        [](const TokenStream& tokens) {
            const LexicalStats s = lexical_stats(tokens);
            return py::make_tuple(s.n_tokens, s.n_types, s.ttr);
        },
        py::arg("tokens"), "(n_tokens, n_types, ttr)");

    m.def(
        "mean_sem",
        [](const std::vector<double>& values) {
            const MeanSem ms = mean_sem(values);
            return py::make_tuple(ms.mean, ms.sem);
        },
        py::arg("values"));
    m.def(
        "pearson",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            return pearson(xs, ys);
        },
        py::arg("xs"), py::arg("ys"));
    m.def(
        "eta_squared",
        [](const std::vector<std::vector<double>>& groups) {
            return eta_squared(groups);
        },
        py::arg("groups"));
    m.def(
        "welch_t",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            const WelchResult r = welch_t(a, b);
            return py::make_tuple(r.t, r.dof, r.p_two_sided);
        },
        py::arg("a"), py::arg("b"), "(t, dof, two_sided_p)");

    py::class_<PyTfIdf>(m, "TfIdf")
        .def(py::init<const std::vector<TokenStream>&, int>(), py::arg("docs"),
             py::arg("min_df") = 1)
        .def("transform", &PyTfIdf::transform, py::arg("stems"),
             "Sparse (index, weight) pairs, L2-normalized.")
        .def("cosine", &PyTfIdf::cosine_between, py::arg("a"), py::arg("b"))
        .def("vocabulary", &PyTfIdf::vocabulary)
        .def("idf", &PyTfIdf::idf);

    m.def("cross_validate", &cross_validate_py, py::arg("docs"),
          py::arg("labels"), py::arg("k") = 10, py::arg("seed") = 42,
          py::arg("lambda_") = 1.0, py::arg("balanced") = false,
          py::arg("min_df") = 1,
          "Stratified k-fold bag-of-words logistic regression report.");
    m.def("keyword_importance", &keyword_importance_py, py::arg("docs"),
          py::arg("labels"), py::arg("min_df") = 1,
          "Per-stem mean tf-idf difference, sorted by importance.");

    m.def("corpus_summary", &corpus_summary_py, py::arg("path"),
          "Per-venue paper/outcome counts of a JSONL corpus.");
    m.def(
        "classify_origin",
        [](const std::vector<std::string>& emails) {
            Manuscript m;
            m.id = "x";
            m.title = "x";
            m.author_emails = emails;
            return std::string(origin_name(classify_origin(m)));
        },
        py::arg("author_emails"), "\"us\" or \"non_us\" under the .edu rule.");
}
