#pragma once

#include <string>
#include <vector>

namespace parcaus {

// 0/1 mask over genomic positions 1..n.
struct PlainSegment {
    std::vector<bool> bits;

    int n() const { return static_cast<int>(bits.size()); }
    bool at(int pos) const { return bits[pos - 1]; }  // 1-based

    bool operator==(const PlainSegment&) const = default;
};

PlainSegment zero_segment(int n);
PlainSegment global_segment(int n);
PlainSegment from_support(const std::vector<int>& support, int n);  // 1-based positions

PlainSegment segment_sum(const PlainSegment& t1, const PlainSegment& t2);
bool is_exact(const PlainSegment& t1, const PlainSegment& t2);
std::vector<int> truncation(const PlainSegment& t);  // ascending 1-based support
bool arrow_exists(const PlainSegment& t1, const PlainSegment& t2);  // support(t2) within support(t1)

// Chunk the ascending support into consecutive groups of at most `window`
// positions; parts are pairwise exact and sum back to t.
std::vector<PlainSegment> decompose(const PlainSegment& t, int window);

// Text format: "0,1,0,1" or "support: 3,4,5,7,9".
PlainSegment parse_segment(const std::string& text, int n);
std::string format_segment(const PlainSegment& t);  // support form

}  // namespace parcaus
