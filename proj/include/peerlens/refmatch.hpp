#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "peerlens/corpus.hpp"

namespace peerlens {

// Fuzzy similarity over token sets: lowercase, strip punctuation, split on
// whitespace; with I = sorted intersection, SA = I + sorted(A\B),
// SB = I + sorted(B\A), returns max over sim(I,SA), sim(I,SB), sim(SA,SB)
// where sim(x,y) = (|x|+|y| - indel(x,y)) / (|x|+|y|). Both inputs empty
// give 1.0 by convention; exactly one empty gives 0.0.
double token_set_ratio(std::string_view a, std::string_view b);

// Edit distance restricted to insertions and deletions.
std::size_t indel_distance(std::string_view a, std::string_view b);

// All four grouping conditions: same year, same author count, author string
// and title each at or above the fuzzy threshold.
bool match_references(const ReferenceRecord& r1, const ReferenceRecord& r2,
                      double threshold = 0.7);

// Disjoint-set grouping of the match relation's transitive closure.
// Records are blocked by (year, author count); blocks run independently.
// Returned group ids are dense, numbered by first appearance in input order.
std::vector<int> group_references(const std::vector<ReferenceRecord>& refs,
                                  double threshold = 0.7, int workers = 1);

struct CouplingScore {
    int intersection = 0;
    double jaccard = 0.0;
};

// Inputs are sorted, deduplicated group-id sets.
CouplingScore coupling(const std::vector<int>& groups_a,
                       const std::vector<int>& groups_b);

struct CouplingPair {
    std::size_t a = 0;
    std::size_t b = 0;
    int intersection = 0;
    double jaccard = 0.0;
};

// Histogram over the intersection counts of emitted pairs, with the fixed
// bucket boundaries 1,2,3,4,5-9,10-19,...,60-80 plus an 81+ overflow row.
struct CouplingHistogram {
    static const std::vector<std::pair<int, int>>& buckets();
    std::vector<std::uint64_t> counts =
        std::vector<std::uint64_t>(buckets().size(), 0);
    void add(int intersection);
};

// Streams all unordered pairs with intersection >= 1 in canonical order and
// fills the histogram. Pair blocks run in parallel; the sink is sequential.
void coupling_table(const std::vector<std::vector<int>>& group_sets,
                    int workers, CouplingHistogram& histogram,
                    const std::function<void(const CouplingPair&)>& sink);

// Per-manuscript sorted set of reference group ids, corpus order.
std::vector<std::vector<int>> manuscript_group_sets(
    const Corpus& corpus, const std::vector<int>& groups);

}  // namespace peerlens
