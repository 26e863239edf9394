#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace peerlens {

enum class Venue {
    Iclr2017,
    Acl2017,
    Conll2016,
    ArxivAi,
    ArxivCl,
    ArxivLg,
    Other,
};

enum class Outcome { Accepted, Rejected, Unknown };

enum class SectionKind { Title, Abstract, Introduction };

enum class OriginClass { Us, NonUs };

struct ReferenceRecord {
    int year = 0;
    std::vector<std::string> authors;
    std::string title;
};

struct VenueTag {
    Venue kind = Venue::Other;
    std::string tag;  // canonical tag; raw string for Other
};

struct Manuscript {
    std::string id;
    VenueTag venue;
    std::string title;
    std::string abstract;
    std::string introduction;
    Outcome outcome = Outcome::Unknown;
    std::vector<std::string> author_emails;
    std::vector<ReferenceRecord> references;
};

struct Corpus {
    std::vector<Manuscript> manuscripts;  // file order of ingestion
    std::string source_path;
    std::chrono::system_clock::time_point loaded_at{};
};

struct LoadReport {
    std::size_t n_loaded = 0;
    std::size_t n_skipped = 0;
    std::vector<std::string> warnings;
};

// Parses JSON-Lines (one manuscript per line). Malformed records (bad JSON,
// missing `id` or `title`) are skipped and reported; an unreadable file
// throws DataError.
Corpus load_corpus(const std::filesystem::path& path, LoadReport& report);

// Canonical JSONL form of the corpus; reload of the output is byte-stable.
std::string serialize_corpus(const Corpus& corpus);

// US iff at least one email, lowercased and trimmed, ends with ".edu".
OriginClass classify_origin(const Manuscript& m);

const std::string& section_text(const Manuscript& m, SectionKind section);

struct VenueSummaryRow {
    std::string venue;
    std::size_t n_papers = 0;
    std::size_t n_accepted = 0;
    std::size_t n_rejected = 0;
    std::size_t n_unknown = 0;
};

// One row per venue present, ordered by venue tag.
std::vector<VenueSummaryRow> corpus_summary(const Corpus& corpus);

VenueTag parse_venue(std::string_view raw);
std::string_view section_name(SectionKind section);
std::string_view outcome_name(Outcome outcome);
std::string_view origin_name(OriginClass origin);

}  // namespace peerlens
