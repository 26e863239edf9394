#include "peerlens/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "peerlens/errors.hpp"

namespace peerlens {

namespace {

using nlohmann::json;

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

bool parse_manuscript(const json& record, Manuscript& m, std::string& why) {
    if (!record.is_object()) {
        why = "record is not an object";
        return false;
    }
    if (!record.contains("id") || !record["id"].is_string() ||
        record["id"].get<std::string>().empty()) {
        why = "missing id";
        return false;
    }
    if (!record.contains("title") || !record["title"].is_string() ||
        record["title"].get<std::string>().empty()) {
        why = "missing title";
        return false;
    }
    m.id = record["id"].get<std::string>();
    m.title = record["title"].get<std::string>();
    m.venue = parse_venue(record.value("venue", std::string()));
    m.abstract = record.value("abstract", std::string());
    m.introduction = record.value("introduction", std::string());
    if (record.contains("accepted") && !record["accepted"].is_null()) {
        m.outcome = record["accepted"].get<bool>() ? Outcome::Accepted
                                                   : Outcome::Rejected;
    } else {
        m.outcome = Outcome::Unknown;
    }
    if (record.contains("author_emails")) {
        for (const auto& e : record["author_emails"])
            m.author_emails.push_back(e.get<std::string>());
    }
    if (record.contains("references")) {
        for (const auto& r : record["references"]) {
            ReferenceRecord ref;
            ref.year = r.value("year", 0);
            ref.title = r.value("title", std::string());
            if (r.contains("authors")) {
                for (const auto& a : r["authors"])
                    ref.authors.push_back(a.get<std::string>());
            }
            m.references.push_back(std::move(ref));
        }
    }
    return true;
}

}  // namespace

VenueTag parse_venue(std::string_view raw) {
    const std::string tag = lower_trimmed(raw);
    static const std::map<std::string, Venue> kKnown = {
        {"iclr_2017", Venue::Iclr2017},   {"acl_2017", Venue::Acl2017},
        {"conll_2016", Venue::Conll2016}, {"arxiv_ai", Venue::ArxivAi},
        {"arxiv_cl", Venue::ArxivCl},     {"arxiv_lg", Venue::ArxivLg},
    };
    const auto it = kKnown.find(tag);
    if (it != kKnown.end()) return VenueTag{it->second, tag};
    return VenueTag{Venue::Other, tag.empty() ? "other" : tag};
}

Corpus load_corpus(const std::filesystem::path& path, LoadReport& report) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus: " + path.string());
    Corpus corpus;
    corpus.source_path = path.string();
    corpus.loaded_at = std::chrono::system_clock::now();
    report = LoadReport{};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json record = json::parse(line, nullptr, false);
        Manuscript m;
        std::string why;
        bool ok = false;
        if (record.is_discarded()) {
            why = "invalid JSON";
        } else {
            try {
                ok = parse_manuscript(record, m, why);
            } catch (const json::exception& e) {
                why = std::string("bad field type: ") + e.what();
            }
        }
        if (ok) {
            if (m.abstract.empty() || m.introduction.empty()) {
                report.warnings.push_back("line " + std::to_string(line_no) +
                                          ": manuscript '" + m.id +
                                          "' has an empty section");
            }
            corpus.manuscripts.push_back(std::move(m));
            ++report.n_loaded;
            continue;
        }
        ++report.n_skipped;
        report.warnings.push_back("line " + std::to_string(line_no) +
                                  " skipped: " + why);
    }
    return corpus;
}

std::string serialize_corpus(const Corpus& corpus) {
    std::string out;
    for (const auto& m : corpus.manuscripts) {
        json record;
        record["id"] = m.id;
        record["venue"] = m.venue.tag;
        record["title"] = m.title;
        record["abstract"] = m.abstract;
        record["introduction"] = m.introduction;
        if (m.outcome == Outcome::Unknown)
            record["accepted"] = nullptr;
        else
            record["accepted"] = m.outcome == Outcome::Accepted;
        record["author_emails"] = m.author_emails;
        json refs = json::array();
        for (const auto& r : m.references) {
            json ref;
            ref["year"] = r.year;
            ref["authors"] = r.authors;
            ref["title"] = r.title;
            refs.push_back(std::move(ref));
        }
        record["references"] = std::move(refs);
        out += record.dump();
        out += '\n';
    }
    return out;
}

OriginClass classify_origin(const Manuscript& m) {
    for (const auto& email : m.author_emails) {
        const std::string e = lower_trimmed(email);
        if (e.size() >= 4 && e.compare(e.size() - 4, 4, ".edu") == 0)
            return OriginClass::Us;
    }
    return OriginClass::NonUs;
}

const std::string& section_text(const Manuscript& m, SectionKind section) {
    switch (section) {
        case SectionKind::Title: return m.title;
        case SectionKind::Abstract: return m.abstract;
        case SectionKind::Introduction: return m.introduction;
    }
    return m.title;
}

std::vector<VenueSummaryRow> corpus_summary(const Corpus& corpus) {
    std::map<std::string, VenueSummaryRow> by_venue;
    for (const auto& m : corpus.manuscripts) {
        auto& row = by_venue[m.venue.tag];
        row.venue = m.venue.tag;
        ++row.n_papers;
        switch (m.outcome) {
            case Outcome::Accepted: ++row.n_accepted; break;
            case Outcome::Rejected: ++row.n_rejected; break;
            case Outcome::Unknown: ++row.n_unknown; break;
        }
    }
    std::vector<VenueSummaryRow> rows;
    rows.reserve(by_venue.size());
    for (auto& [tag, row] : by_venue) rows.push_back(std::move(row));
    return rows;
}

std::string_view section_name(SectionKind section) {
    switch (section) {
        case SectionKind::Title: return "title";
        case SectionKind::Abstract: return "abstract";
        case SectionKind::Introduction: return "introduction";
    }
    return "title";
}

std::string_view outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::Accepted: return "accepted";
        case Outcome::Rejected: return "rejected";
        case Outcome::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view origin_name(OriginClass origin) {
    return origin == OriginClass::Us ? "us" : "non_us";
}

}  // namespace peerlens
