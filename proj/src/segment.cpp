#include "parcaus/segment.hpp"

#include <sstream>
#include <stdexcept>

namespace parcaus {

PlainSegment zero_segment(int n) { return PlainSegment{std::vector<bool>(n, false)}; }

PlainSegment global_segment(int n) { return PlainSegment{std::vector<bool>(n, true)}; }

PlainSegment from_support(const std::vector<int>& support, int n) {
    PlainSegment t = zero_segment(n);
    for (int pos : support) {
        if (pos < 1 || pos > n) throw std::invalid_argument("segment position out of range");
        t.bits[pos - 1] = true;
    }
    return t;
}

static void check_len(const PlainSegment& t1, const PlainSegment& t2) {
    if (t1.n() != t2.n()) throw std::invalid_argument("segment length mismatch");
}

PlainSegment segment_sum(const PlainSegment& t1, const PlainSegment& t2) {
    check_len(t1, t2);
    PlainSegment out = t1;
    for (int i = 0; i < t2.n(); ++i)
        if (t2.bits[i]) out.bits[i] = true;
    return out;
}

bool is_exact(const PlainSegment& t1, const PlainSegment& t2) {
    check_len(t1, t2);
    for (int i = 0; i < t1.n(); ++i)
        if (t1.bits[i] && t2.bits[i]) return false;
    return true;
}

std::vector<int> truncation(const PlainSegment& t) {
    std::vector<int> support;
    for (int i = 0; i < t.n(); ++i)
        if (t.bits[i]) support.push_back(i + 1);
    return support;
}

bool arrow_exists(const PlainSegment& t1, const PlainSegment& t2) {
    check_len(t1, t2);
    for (int i = 0; i < t1.n(); ++i)
        if (t2.bits[i] && !t1.bits[i]) return false;
    return true;
}

std::vector<PlainSegment> decompose(const PlainSegment& t, int window) {
    if (window < 1) throw std::invalid_argument("window must be positive");
    std::vector<PlainSegment> parts;
    std::vector<int> run;
    for (int pos : truncation(t)) {
        run.push_back(pos);
        if (static_cast<int>(run.size()) == window) {
            parts.push_back(from_support(run, t.n()));
            run.clear();
        }
    }
    if (!run.empty()) parts.push_back(from_support(run, t.n()));
    return parts;
}

PlainSegment parse_segment(const std::string& text, int n) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        line = line.substr(pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.rfind("support:", 0) == 0) {
            std::string body = line.substr(8);
            for (char& c : body)
                if (c == ',') c = ' ';
            std::istringstream in(body);
            std::vector<int> support;
            int p;
            while (in >> p) support.push_back(p);
            return from_support(support, n);
        }
        std::string body = line;
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream in(body);
        std::vector<bool> bits;
        int b;
        while (in >> b) {
            if (b != 0 && b != 1) throw std::invalid_argument("segment bits must be 0 or 1");
            bits.push_back(b == 1);
        }
        if (static_cast<int>(bits.size()) != n)
            throw std::invalid_argument("segment length does not match position count");
        return PlainSegment{std::move(bits)};
    }
    throw std::invalid_argument("empty segment file");
}

std::string format_segment(const PlainSegment& t) {
    std::ostringstream out;
    out << "support:";
    bool first = true;
    for (int pos : truncation(t)) {
        out << (first ? " " : ",") << pos;
        first = false;
    }
    return out.str();
}

}  // namespace parcaus
