#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parcaus {

// Canonical partition of the ordered ground set {0,...,n-1}.
// Block ids are 1..blocks(), numbered by first occurrence, so equality of
// partitions is plain vector equality.
class Partition {
public:
    Partition() = default;

    static Partition from_assign(const std::vector<int>& raw);

    template <typename Label>
    static Partition from_labels(const std::vector<Label>& labels) {
        if (labels.empty()) throw std::invalid_argument("empty ground set");
        std::map<Label, int> seen;
        std::vector<int> assign(labels.size());
        int next = 0;
        for (std::size_t s = 0; s < labels.size(); ++s) {
            auto [it, inserted] = seen.emplace(labels[s], next + 1);
            if (inserted) ++next;
            assign[s] = it->second;
        }
        Partition p;
        p.assign_ = std::move(assign);
        p.blocks_ = next;
        return p;
    }

    static Partition terminal(std::size_t n);
    static Partition discrete(std::size_t n);

    std::size_t size() const { return assign_.size(); }
    int blocks() const { return blocks_; }
    int block_of(std::size_t s) const { return assign_[s]; }
    const std::vector<int>& assign() const { return assign_; }

    // Blocks in block-id order (= order of least element).
    std::vector<std::vector<std::size_t>> fibers() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return assign_ < o.assign_; }

private:
    std::vector<int> assign_;
    int blocks_ = 0;
};

// Common refinement: elements share a block iff they do in both p and q.
Partition product(const Partition& p, const Partition& q);

// Two-block partition {x, S\x}; one block when x is empty or all of S.
Partition delta(const std::vector<std::size_t>& x, std::size_t n);

// Blocks are the non-empty family members plus the complement of their union.
Partition delta_star(const std::vector<std::vector<std::size_t>>& family, std::size_t n);

struct BlockMap {
    int source_blocks = 0;
    int target_blocks = 0;
    std::vector<int> map;  // map[i-1] = target block of source block i
};

// The unique block map f with f . p = q, when every p-block sits inside a
// single q-block; absent otherwise.
std::optional<BlockMap> find_arrow(const Partition& p, const Partition& q);

// Merge blocks j1 and j2 (1-based), renumber canonically.
Partition contract(const Partition& x, int j1, int j2);

// Text format: "assign: 1 2 2 1 3" or "blocks: {0,3} {1,2} {4}".
Partition parse_partition(const std::string& text, std::size_t ground_size);
Partition parse_partition(const std::string& text);  // ground size inferred
std::string format_partition(const Partition& p);  // block form

}  // namespace parcaus
