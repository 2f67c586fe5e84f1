#pragma once

#include <array>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nw/candidates.hpp"
#include "nw/quadruple.hpp"
#include "nw/row.hpp"

namespace nw {

// One record of the text format:
//
//   n=7
//   A: ++-+--+
//   B: +-++++-
//   C: ++---+-        (signs may also be spaced: "+ + - ...")
//   D: +++--++
//   sums: 1 3 -1 -1   (optional)
//   mode: full        (optional)
//
// Records are separated by blank lines; '#' starts a comment line.  Rows
// B, C, D must be palindromic.
struct QuadrupleRecord {
    Quadruple quadruple;
    std::optional<std::array<int, 4>> sums;
    std::optional<SearchMode> mode;
};

namespace detail {

inline bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (ch != ' ' && ch != '\t') return false;
    }
    return true;
}

inline std::vector<int> parse_sign_run(const std::string& body, int lineno,
                                       int offset) {
    std::vector<int> signs;
    bool gap_ok = true;  // at most one space between signs
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char ch = body[i];
        if (ch == '+' || ch == '-') {
            signs.push_back(ch == '+' ? 1 : -1);
            gap_ok = true;
        } else if (ch == ' ' && gap_ok) {
            gap_ok = false;
        } else {
            throw ParseError(std::string("unexpected character '") + ch +
                                 "' in row data",
                             lineno, offset + static_cast<int>(i) + 1);
        }
    }
    return signs;
}

}  // namespace detail

inline std::vector<QuadrupleRecord> parse_quadruples(std::istream& in) {
    std::vector<QuadrupleRecord> out;
    std::string line;
    int lineno = 0;

    int order = 0;
    std::array<std::optional<std::vector<int>>, 4> rows;
    std::optional<std::array<int, 4>> sums;
    std::optional<SearchMode> mode;
    bool open = false;
    int open_line = 0;

    auto flush = [&]() {
        if (!open) return;
        static const char* labels = "ABCD";
        for (int i = 0; i < 4; ++i)
            if (!rows[i])
                throw ParseError(std::string("record is missing row ") + labels[i],
                                 open_line, 1);
        std::array<CirculantRow, 4> r{
            CirculantRow::from_signs(*rows[0]), CirculantRow::from_signs(*rows[1]),
            CirculantRow::from_signs(*rows[2]), CirculantRow::from_signs(*rows[3])};
        for (int i = 1; i < 4; ++i)
            if (!r[i].is_symmetric())
                throw SymmetryViolation(
                    std::string("row ") + labels[i] + " must be symmetric",
                    std::string(1, labels[i]));
        out.push_back({Quadruple{r[0], r[1], r[2], r[3]}, sums, mode});
        rows = {};
        sums.reset();
        mode.reset();
        open = false;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::blank_or_comment(line)) {
            bool has_comment = line.find('#') != std::string::npos;
            if (!has_comment) flush();  // blank line ends the record
            continue;
        }
        if (line.rfind("n=", 0) == 0) {
            flush();
            const std::string val = line.substr(2);
            std::size_t used = 0;
            int n = 0;
            try {
                n = std::stoi(val, &used);
            } catch (const std::exception&) {
                throw ParseError("order is not a number", lineno, 3);
            }
            if (used != val.size())
                throw ParseError("trailing characters after order", lineno,
                                 3 + static_cast<int>(used));
            if (n < 1 || n > 63 || n % 2 == 0)
                throw ParseError("order must be odd and within [1, 63]", lineno, 3);
            order = n;
            open = true;
            open_line = lineno;
            continue;
        }
        if (!open)
            throw ParseError("expected 'n=<order>' before row data", lineno, 1);
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected '<label>: <data>'", lineno, 1);
        const std::string label = line.substr(0, colon);
        std::string body = line.substr(colon + 1);
        int offset = static_cast<int>(colon) + 1;
        if (!body.empty() && body.front() == ' ') {
            body.erase(body.begin());
            ++offset;
        }
        if (label.size() == 1 && label[0] >= 'A' && label[0] <= 'D') {
            const int slot = label[0] - 'A';
            if (rows[slot])
                throw ParseError("duplicate row " + label, lineno, 1);
            std::vector<int> signs = detail::parse_sign_run(body, lineno, offset);
            if (static_cast<int>(signs.size()) != order)
                throw ParseError("row has " + std::to_string(signs.size()) +
                                     " entries, expected " + std::to_string(order),
                                 lineno, offset + 1);
            rows[slot] = std::move(signs);
        } else if (label == "sums") {
            std::istringstream ss(body);
            std::array<int, 4> v{};
            if (!(ss >> v[0] >> v[1] >> v[2] >> v[3]))
                throw ParseError("sums needs four integers", lineno, offset + 1);
            std::string rest;
            if (ss >> rest)
                throw ParseError("trailing data after sums", lineno, offset + 1);
            sums = v;
        } else if (label == "mode") {
            if (body == "full")
                mode = SearchMode::Full;
            else if (body == "almost-symmetric")
                mode = SearchMode::AlmostSymmetricA;
            else
                throw ParseError("mode must be 'full' or 'almost-symmetric'",
                                 lineno, offset + 1);
        } else {
            throw ParseError("unknown line label '" + label + "'", lineno, 1);
        }
    }
    flush();
    return out;
}

inline std::vector<QuadrupleRecord> parse_quadruple_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_quadruples(in);
}

inline std::string serialize_quadruple(const QuadrupleRecord& rec) {
    std::string out = "n=" + std::to_string(rec.quadruple.order()) + "\n";
    const std::array<const CirculantRow*, 4> rows{
        &rec.quadruple.a, &rec.quadruple.b, &rec.quadruple.c, &rec.quadruple.d};
    static const char* labels = "ABCD";
    for (int i = 0; i < 4; ++i) {
        out += labels[i];
        out += ": ";
        out += rows[i]->to_string();
        out += '\n';
    }
    if (rec.sums) {
        out += "sums:";
        for (int v : *rec.sums) out += ' ' + std::to_string(v);
        out += '\n';
    }
    if (rec.mode)
        out += std::string("mode: ") +
               (*rec.mode == SearchMode::Full ? "full" : "almost-symmetric") + "\n";
    return out;
}

inline std::string serialize_quadruples(const std::vector<QuadrupleRecord>& recs) {
    std::string out;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        if (i > 0) out += '\n';
        out += serialize_quadruple(recs[i]);
    }
    return out;
}

inline void write_quadruple_file(const std::string& path,
                                 const std::vector<QuadrupleRecord>& recs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << serialize_quadruples(recs);
    if (!out) throw Error("failed writing " + path);
}

}  // namespace nw
