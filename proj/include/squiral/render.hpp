#pragma once

#include <string>
#include <vector>

#include "squiral/grid.hpp"
#include "squiral/int128.hpp"
#include "squiral/sequences.hpp"

namespace squiral {

// Rows of '0'/'1' characters, one line per grid row, top row first.
inline std::string to_text(const BinaryGrid& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(g.rows()) * (g.cols() + 1));
    for (long r = 1; r <= g.rows(); ++r) {
        for (long c = 1; c <= g.cols(); ++c) {
            out += g.test(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

// Plain PBM (P1). Symbol 1 renders as PBM black (1).
inline std::string to_pbm_plain(const BinaryGrid& g) {
    std::string out = "P1\n" + std::to_string(g.cols()) + " " + std::to_string(g.rows()) + "\n";
    out += to_text(g);
    return out;
}

// Raw PBM (P4): rows packed 8 pixels per byte, MSB first, each row padded to
// a whole byte.
inline std::string to_pbm_raw(const BinaryGrid& g) {
    std::string out = "P4\n" + std::to_string(g.cols()) + " " + std::to_string(g.rows()) + "\n";
    const long row_bytes = (g.cols() + 7) / 8;
    for (long r = 1; r <= g.rows(); ++r) {
        for (long b = 0; b < row_bytes; ++b) {
            unsigned byte = 0;
            for (int k = 0; k < 8; ++k) {
                const long c = 8 * b + k + 1;
                if (c <= g.cols() && g.test(r, c)) {
                    byte |= 0x80u >> k;
                }
            }
            out += static_cast<char>(byte);
        }
    }
    return out;
}

// CSV with header n,A,B,C and LF line endings.
inline std::string to_csv(const std::vector<ComplexityTriple>& rows) {
    std::string out = "n,A,B,C\n";
    for (const ComplexityTriple& t : rows) {
        out += std::to_string(t.n);
        out += ',';
        out += to_string(t.A);
        out += ',';
        out += to_string(t.B);
        out += ',';
        out += to_string(t.C);
        out += '\n';
    }
    return out;
}

namespace detail {

// JSON numbers stay numbers while they fit in 64 bits; beyond that they are
// emitted as decimal strings.
inline void append_json_value(std::string& out, int128 v) {
    if (fits_int64(v)) {
        out += to_string(v);
    } else {
        out += '"';
        out += to_string(v);
        out += '"';
    }
}

} // namespace detail

// Compact JSON array of {"n":..,"A":..,"B":..,"C":..} objects.
inline std::string to_json(const std::vector<ComplexityTriple>& rows) {
    std::string out = "[";
    bool first = true;
    for (const ComplexityTriple& t : rows) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += "{\"n\":" + std::to_string(t.n) + ",\"A\":";
        detail::append_json_value(out, t.A);
        out += ",\"B\":";
        detail::append_json_value(out, t.B);
        out += ",\"C\":";
        detail::append_json_value(out, t.C);
        out += '}';
    }
    out += ']';
    return out;
}

} // namespace squiral
