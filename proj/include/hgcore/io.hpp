#ifndef HGCORE_IO_HPP
#define HGCORE_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hgcore/error.hpp"
#include "hgcore/model.hpp"

namespace hgcore {

// .hg text format: one hyperedge per line, members separated by ASCII
// whitespace. Blank lines and lines whose first non-blank character is '#'
// are skipped. Labels are opaque UTF-8 byte strings.

inline std::vector<EdgeRecord> parse_hg(std::istream& in) {
    std::vector<EdgeRecord> records;
    std::string line;
    std::size_t lineno = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (std::getline(in, line)) {
        ++lineno;
        EdgeRecord rec;
        rec.line = lineno;
        std::size_t i = 0;
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size() || line[i] == '#') continue;
        while (i < line.size()) {
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j])) ++j;
            rec.members.emplace_back(line, i, j - i);
            i = j;
            while (i < line.size() && is_space(line[i])) ++i;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

inline std::vector<EdgeRecord> read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_hg(in);
}

inline BuildResult load_hg(const std::string& path, SingletonPolicy policy = SingletonPolicy::Reject) {
    auto records = read_hg_file(path);
    return build(std::span<const EdgeRecord>(records), policy);
}

/// Writes canonical form: one edge per line, members in ascending id order.
inline void write_hg(std::ostream& out, const Hypergraph& h) {
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        bool first = true;
        for (NodeId v : h.edge(e)) {
            if (!first) out << ' ';
            out << h.label(v);
            first = false;
        }
        out << '\n';
    }
}

} // namespace hgcore

#endif // HGCORE_IO_HPP
