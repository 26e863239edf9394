#include "peerlens/refmatch.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "peerlens/parallel.hpp"

namespace peerlens {

namespace {

inline bool is_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
}
inline char to_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Lowercase, strip punctuation, split on whitespace -> sorted unique tokens.
std::vector<std::string> token_set(std::string_view s) {
    std::set<std::string> tokens;
    std::string current;
    for (char c : s) {
        if (is_alnum(c)) {
            current += to_lower(c);
        } else if (!current.empty()) {
            tokens.insert(current);
            current.clear();
        }
    }
    if (!current.empty()) tokens.insert(current);
    return {tokens.begin(), tokens.end()};
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

// Normalized indel similarity: (|x|+|y| - indel(x,y)) / (|x|+|y|).
double indel_similarity(std::string_view x, std::string_view y) {
    const std::size_t total = x.size() + y.size();
    if (total == 0) return 1.0;
    return static_cast<double>(total - indel_distance(x, y)) /
           static_cast<double>(total);
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::string joined_authors(const ReferenceRecord& r) {
    std::string out;
    for (const auto& a : r.authors) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

}  // namespace

std::size_t indel_distance(std::string_view a, std::string_view b) {
    // Common prefixes and suffixes align in some optimal matching, so they
    // can be stripped before the quadratic part.
    while (!a.empty() && !b.empty() && a.front() == b.front()) {
        a.remove_prefix(1);
        b.remove_prefix(1);
    }
    while (!a.empty() && !b.empty() && a.back() == b.back()) {
        a.remove_suffix(1);
        b.remove_suffix(1);
    }
    // Via the LCS identity: indel = |a| + |b| - 2*LCS(a, b).
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1, 0), curr(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            if (a[i - 1] == b[j - 1])
                curr[j] = prev[j - 1] + 1;
            else
                curr[j] = std::max(prev[j], curr[j - 1]);
        }
        std::swap(prev, curr);
    }
    const std::size_t lcs = prev[m];
    return n + m - 2 * lcs;
}

namespace {

// Ratio over pre-normalized sorted token sets. The intersection string I is
// a prefix of both SA and SB, so sim(I, SA) and sim(I, SB) have the closed
// form 2|I| / (|I| + |S|); only sim(SA, SB) needs the distance proper.
double ratio_from_sets(const std::vector<std::string>& ta,
                       const std::vector<std::string>& tb) {
    if (ta.empty() && tb.empty()) return 1.0;
    if (ta.empty() || tb.empty()) return 0.0;

    std::vector<std::string> common, only_a, only_b;
    std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                          std::back_inserter(common));
    std::set_difference(ta.begin(), ta.end(), tb.begin(), tb.end(),
                        std::back_inserter(only_a));
    std::set_difference(tb.begin(), tb.end(), ta.begin(), ta.end(),
                        std::back_inserter(only_b));

    const std::string i = join(common);
    std::string sa = i;
    if (!i.empty() && !only_a.empty()) sa += ' ';
    sa += join(only_a);
    std::string sb = i;
    if (!i.empty() && !only_b.empty()) sb += ' ';
    sb += join(only_b);

    double best = indel_similarity(sa, sb);
    if (!i.empty()) {
        const double ni = static_cast<double>(i.size());
        best = std::max(best, 2.0 * ni / (ni + static_cast<double>(sa.size())));
        best = std::max(best, 2.0 * ni / (ni + static_cast<double>(sb.size())));
    }
    return best;
}

}  // namespace

double token_set_ratio(std::string_view a, std::string_view b) {
    return ratio_from_sets(token_set(a), token_set(b));
}

bool match_references(const ReferenceRecord& r1, const ReferenceRecord& r2,
                      double threshold) {
    if (r1.year != r2.year) return false;
    if (r1.authors.size() != r2.authors.size()) return false;
    if (token_set_ratio(joined_authors(r1), joined_authors(r2)) < threshold)
        return false;
    return token_set_ratio(r1.title, r2.title) >= threshold;
}

std::vector<int> group_references(const std::vector<ReferenceRecord>& refs,
                                  double threshold, int workers) {
    const std::size_t n = refs.size();
    DisjointSet ds(n);
    // Blocking by (year, author count): match_references requires equality
    // on both, so no cross-block union is possible.
    std::map<std::pair<int, std::size_t>, std::vector<int>> blocks;
    for (std::size_t i = 0; i < n; ++i)
        blocks[{refs[i].year, refs[i].authors.size()}].push_back(
            static_cast<int>(i));
    std::vector<const std::vector<int>*> block_list;
    block_list.reserve(blocks.size());
    for (const auto& [key, members] : blocks) block_list.push_back(&members);

    // normalize each record once; the pairwise loops reuse the token sets
    std::vector<std::vector<std::string>> author_sets(n), title_sets(n);
    for (std::size_t i = 0; i < n; ++i) {
        author_sets[i] = token_set(joined_authors(refs[i]));
        title_sets[i] = token_set(refs[i].title);
    }

    parallel_blocks(block_list.size(), 1, workers,
                    [&](std::size_t block, std::size_t, std::size_t) {
                        const auto& members = *block_list[block];
                        for (std::size_t x = 0; x < members.size(); ++x) {
                            for (std::size_t y = x + 1; y < members.size(); ++y) {
                                // year and author count already agree here;
                                // unions stay within this block
                                const int a = members[x], b = members[y];
                                if (ratio_from_sets(author_sets[a],
                                                    author_sets[b]) < threshold)
                                    continue;
                                if (ratio_from_sets(title_sets[a],
                                                    title_sets[b]) >= threshold)
                                    ds.unite(a, b);
                            }
                        }
                    });

    // Dense ids numbered by first appearance in input order.
    std::vector<int> groups(n, -1);
    std::map<int, int> root_to_group;
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int root = ds.find(static_cast<int>(i));
        const auto [it, inserted] = root_to_group.emplace(root, next);
        if (inserted) ++next;
        groups[i] = it->second;
    }
    return groups;
}

CouplingScore coupling(const std::vector<int>& groups_a,
                       const std::vector<int>& groups_b) {
    CouplingScore score;
    std::size_t ia = 0, ib = 0;
    while (ia < groups_a.size() && ib < groups_b.size()) {
        if (groups_a[ia] < groups_b[ib]) {
            ++ia;
        } else if (groups_b[ib] < groups_a[ia]) {
            ++ib;
        } else {
            ++score.intersection;
            ++ia;
            ++ib;
        }
    }
    const std::size_t union_size =
        groups_a.size() + groups_b.size() - score.intersection;
    score.jaccard = union_size == 0
                        ? 0.0
                        : static_cast<double>(score.intersection) /
                              static_cast<double>(union_size);
    return score;
}

const std::vector<std::pair<int, int>>& CouplingHistogram::buckets() {
    static const std::vector<std::pair<int, int>> kBuckets = {
        {1, 1},   {2, 2},   {3, 3},   {4, 4},   {5, 9},   {10, 19},
        {20, 29}, {30, 39}, {40, 49}, {50, 59}, {60, 80}, {81, -1},
    };
    return kBuckets;
}

void CouplingHistogram::add(int intersection) {
    const auto& b = buckets();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (intersection >= b[i].first &&
            (b[i].second < 0 || intersection <= b[i].second)) {
            ++counts[i];
            return;
        }
    }
}

void coupling_table(const std::vector<std::vector<int>>& group_sets,
                    int workers, CouplingHistogram& histogram,
                    const std::function<void(const CouplingPair&)>& sink) {
    const std::size_t n = group_sets.size();
    constexpr std::size_t kRowBlock = 64;
    const std::size_t n_blocks = n == 0 ? 0 : (n + kRowBlock - 1) / kRowBlock;
    ordered_blocks<std::vector<CouplingPair>>(
        n_blocks, workers,
        [&](std::size_t block) {
            std::vector<CouplingPair> buffer;
            const std::size_t begin = block * kRowBlock;
            const std::size_t end = std::min(n, begin + kRowBlock);
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    const CouplingScore s =
                        coupling(group_sets[i], group_sets[j]);
                    if (s.intersection < 1) continue;
                    buffer.push_back(
                        CouplingPair{i, j, s.intersection, s.jaccard});
                }
            }
            return buffer;
        },
        [&](std::size_t, std::vector<CouplingPair>&& buffer) {
            for (const auto& pair : buffer) {
                histogram.add(pair.intersection);
                sink(pair);
            }
        });
}

std::vector<std::vector<int>> manuscript_group_sets(
    const Corpus& corpus, const std::vector<int>& groups) {
    std::vector<std::vector<int>> sets;
    sets.reserve(corpus.manuscripts.size());
    std::size_t offset = 0;
    for (const auto& m : corpus.manuscripts) {
        std::set<int> ids;
        for (std::size_t r = 0; r < m.references.size(); ++r)
            ids.insert(groups[offset + r]);
        offset += m.references.size();
        sets.emplace_back(ids.begin(), ids.end());
    }
    return sets;
}

}  // namespace peerlens
