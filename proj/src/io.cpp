#include "parcaus/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parcaus {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
        fields.push_back(field);
    }
    return fields;
}

bool valid_allele(char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T' || c == '.';
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

GenotypeTable parse_genotypes_text(const std::string& text, bool phased) {
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    GenotypeTable table;
    table.phased = phased;

    if (!std::getline(lines, line)) throw std::invalid_argument("empty ground set");
    ++line_no;
    std::vector<std::string> header = split_tabs(line);
    if (header.empty() || header[0] != "id") fail(line_no, "genotype header must start with 'id'");
    table.positions = static_cast<int>(header.size()) - 1;
    if (table.positions < 1) fail(line_no, "genotype file has no positions");

    std::set<std::string> seen;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> fields = split_tabs(line);
        if (static_cast<int>(fields.size()) != table.positions + 1)
            fail(line_no, "expected " + std::to_string(table.positions + 1) + " columns, got " +
                              std::to_string(fields.size()));
        if (!seen.insert(fields[0]).second) fail(line_no, "duplicate id " + fields[0]);
        table.ids.push_back(fields[0]);
        std::vector<std::array<char, 2>> row(table.positions);
        for (int p = 0; p < table.positions; ++p) {
            const std::string& cell = fields[p + 1];
            if (cell.size() != 2 || !valid_allele(cell[0]) || !valid_allele(cell[1]))
                fail(line_no, "malformed cell '" + cell + "' at position " + std::to_string(p + 1));
            row[p] = {cell[0], cell[1]};
        }
        table.cells.push_back(std::move(row));
    }
    if (table.ids.empty()) throw std::invalid_argument("empty ground set");
    return table;
}

std::string format_genotypes(const GenotypeTable& table) {
    std::ostringstream out;
    out << "id";
    for (int p = 1; p <= table.positions; ++p) out << "\tpos_" << p;
    out << '\n';
    for (std::size_t s = 0; s < table.individuals(); ++s) {
        out << table.ids[s];
        for (int p = 0; p < table.positions; ++p)
            out << '\t' << table.cells[s][p][0] << table.cells[s][p][1];
        out << '\n';
    }
    return out.str();
}

namespace {

Phenotypes parse_phenotype_rows(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    Phenotypes ph;
    std::set<std::string> seen;
    bool any_categorical = false;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != 2) fail(line_no, "expected 'id<TAB>value'");
        if (line_no == 1 && fields[0] == "id" && fields[1] == "value") continue;  // header
        if (!seen.insert(fields[0]).second) fail(line_no, "duplicate id " + fields[0]);
        ph.ids.push_back(fields[0]);
        ph.tokens.push_back(fields[1]);
        double v = 0.0;
        auto [p, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), v);
        if (ec != std::errc() || p != fields[1].data() + fields[1].size()) any_categorical = true;
        ph.values.push_back(v);
    }
    if (ph.ids.empty()) throw std::invalid_argument("empty ground set");
    if (any_categorical) {
        // categorical encoding: integer codes by first occurrence
        ph.categorical = true;
        std::map<std::string, int> codes;
        int next = 0;
        for (std::size_t s = 0; s < ph.tokens.size(); ++s) {
            auto [it, inserted] = codes.emplace(ph.tokens[s], next);
            if (inserted) ++next;
            ph.values[s] = static_cast<double>(it->second);
        }
    }
    return ph;
}

}  // namespace

Phenotypes parse_phenotypes_text(const std::string& text) { return parse_phenotype_rows(text); }

Phenotypes parse_phenotypes_text(const std::string& text, const std::vector<std::string>& ids) {
    Phenotypes raw = parse_phenotype_rows(text);
    std::map<std::string, std::size_t> index;
    for (std::size_t s = 0; s < raw.ids.size(); ++s) index[raw.ids[s]] = s;

    std::string missing, extra;
    std::set<std::string> wanted(ids.begin(), ids.end());
    for (const std::string& id : ids)
        if (!index.count(id)) missing += (missing.empty() ? "" : ", ") + id;
    for (const std::string& id : raw.ids)
        if (!wanted.count(id)) extra += (extra.empty() ? "" : ", ") + id;
    if (!missing.empty()) throw std::invalid_argument("phenotype file missing ids: " + missing);
    if (!extra.empty()) throw std::invalid_argument("phenotype file has extra ids: " + extra);

    Phenotypes joined;
    joined.categorical = raw.categorical;
    for (const std::string& id : ids) {
        std::size_t s = index[id];
        joined.ids.push_back(id);
        joined.values.push_back(raw.values[s]);
        joined.tokens.push_back(raw.tokens[s]);
    }
    return joined;
}

std::string format_phenotypes(const std::vector<std::string>& ids,
                              const std::vector<double>& values) {
    std::ostringstream out;
    out << "id\tvalue\n";
    out.precision(17);
    for (std::size_t s = 0; s < ids.size(); ++s) out << ids[s] << '\t' << values[s] << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

GenotypeTable parse_genotypes_file(const std::string& path, bool phased) {
    return parse_genotypes_text(read_file(path), phased);
}

Phenotypes parse_phenotypes_file(const std::string& path, const std::vector<std::string>& ids) {
    return parse_phenotypes_text(read_file(path), ids);
}

Phenotypes parse_phenotypes_file(const std::string& path) {
    return parse_phenotypes_text(read_file(path));
}

Partition parse_partition_file(const std::string& path, std::size_t ground_size) {
    return parse_partition(read_file(path), ground_size);
}

PlainSegment parse_segment_file_or_literal(const std::string& path_or_literal, int n) {
    std::ifstream probe(path_or_literal);
    if (probe) return parse_segment(read_file(path_or_literal), n);
    return parse_segment(path_or_literal, n);
}

}  // namespace parcaus
