#include "parcaus/partition.hpp"

#include <algorithm>
#include <sstream>

namespace parcaus {

Partition Partition::from_assign(const std::vector<int>& raw) {
    return from_labels(raw);
}

Partition Partition::terminal(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty ground set");
    return from_labels(std::vector<int>(n, 1));
}

Partition Partition::discrete(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty ground set");
    std::vector<int> raw(n);
    for (std::size_t s = 0; s < n; ++s) raw[s] = static_cast<int>(s);
    return from_labels(raw);
}

std::vector<std::vector<std::size_t>> Partition::fibers() const {
    std::vector<std::vector<std::size_t>> out(blocks_);
    for (std::size_t s = 0; s < assign_.size(); ++s) out[assign_[s] - 1].push_back(s);
    return out;
}

Partition product(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("mismatched ground sets");
    const int nq = q.blocks();
    std::vector<long long> keys(p.size());
    for (std::size_t s = 0; s < p.size(); ++s)
        keys[s] = static_cast<long long>(p.block_of(s) - 1) * nq + (q.block_of(s) - 1);
    return Partition::from_labels(keys);
}

Partition delta(const std::vector<std::size_t>& x, std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty ground set");
    std::vector<int> raw(n, 0);
    for (std::size_t s : x) {
        if (s >= n) throw std::invalid_argument("subset element out of range");
        raw[s] = 1;
    }
    return Partition::from_labels(raw);
}

Partition delta_star(const std::vector<std::vector<std::size_t>>& family, std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty ground set");
    std::vector<int> raw(n, 0);
    int tag = 0;
    for (const auto& member : family) {
        ++tag;
        for (std::size_t s : member) {
            if (s >= n) throw std::invalid_argument("subset element out of range");
            if (raw[s] != 0) throw std::invalid_argument("family not pairwise disjoint");
            raw[s] = tag;
        }
    }
    return Partition::from_labels(raw);
}

std::optional<BlockMap> find_arrow(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("mismatched ground sets");
    std::vector<int> target(p.blocks(), 0);
    for (std::size_t s = 0; s < p.size(); ++s) {
        int& t = target[p.block_of(s) - 1];
        if (t == 0)
            t = q.block_of(s);
        else if (t != q.block_of(s))
            return std::nullopt;
    }
    return BlockMap{p.blocks(), q.blocks(), std::move(target)};
}

Partition contract(const Partition& x, int j1, int j2) {
    if (j1 == j2) throw std::invalid_argument("contract: blocks must differ");
    if (j1 < 1 || j2 < 1 || j1 > x.blocks() || j2 > x.blocks())
        throw std::invalid_argument("contract: block id out of range");
    std::vector<int> raw = x.assign();
    for (int& b : raw)
        if (b == j2) b = j1;
    return Partition::from_labels(raw);
}

Partition parse_partition(const std::string& text, std::size_t ground_size) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        line = line.substr(pos);
        if (line.rfind("assign:", 0) == 0) {
            std::istringstream in(line.substr(7));
            std::vector<int> raw;
            int b;
            while (in >> b) raw.push_back(b);
            if (raw.size() != ground_size)
                throw std::invalid_argument("partition assign length does not match ground set");
            return Partition::from_labels(raw);
        }
        if (line.rfind("blocks:", 0) == 0) {
            std::vector<int> raw(ground_size, 0);
            std::size_t covered = 0;
            int tag = 0;
            std::size_t i = line.find('{');
            while (i != std::string::npos) {
                std::size_t j = line.find('}', i);
                if (j == std::string::npos) throw std::invalid_argument("unbalanced block braces");
                ++tag;
                std::string body = line.substr(i + 1, j - i - 1);
                for (char& c : body)
                    if (c == ',') c = ' ';
                std::istringstream in(body);
                long long e;
                while (in >> e) {
                    if (e < 0 || static_cast<std::size_t>(e) >= ground_size)
                        throw std::invalid_argument("block element out of range");
                    if (raw[e] != 0) throw std::invalid_argument("blocks overlap");
                    raw[e] = tag;
                    ++covered;
                }
                i = line.find('{', j);
            }
            if (covered != ground_size)
                throw std::invalid_argument("blocks do not cover the ground set");
            return Partition::from_labels(raw);
        }
        throw std::invalid_argument("unrecognized partition line: " + line);
    }
    throw std::invalid_argument("empty partition file");
}

Partition parse_partition(const std::string& text) {
    // infer the ground size: token count for assign form, element count for
    // block form (which must cover 0..n-1 anyway)
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        line = line.substr(pos);
        std::string body;
        if (line.rfind("assign:", 0) == 0)
            body = line.substr(7);
        else if (line.rfind("blocks:", 0) == 0)
            body = line.substr(7);
        else
            throw std::invalid_argument("unrecognized partition line: " + line);
        for (char& c : body)
            if (c == ',' || c == '{' || c == '}') c = ' ';
        std::istringstream in(body);
        std::size_t count = 0;
        long long tok;
        while (in >> tok) ++count;
        return parse_partition(text, count);
    }
    throw std::invalid_argument("empty partition file");
}

std::string format_partition(const Partition& p) {
    std::ostringstream out;
    out << "blocks:";
    for (const auto& block : p.fibers()) {
        out << " {";
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k) out << ',';
            out << block[k];
        }
        out << '}';
    }
    return out.str();
}

}  // namespace parcaus
