#pragma once

// Parity-check matrix text format.
//
//   <rows> <cols>
//   <rows lines of exactly <cols> characters from {0,1}>
//
// Lines starting with '#' are comments. The trailing newline is optional.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qltc/bit_matrix.hpp"

namespace qltc {

inline std::string write_pcm(const BitMatrix& m) {
    return std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + m.to_string();
}

namespace detail {

inline std::size_t parse_count(std::string_view s, const char* what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError(std::string("PCM: invalid ") + what + " '" + std::string(s) + "'");
    return v;
}

}  // namespace detail

inline BitMatrix read_pcm(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    // The piece after a final '\n' is not a line.
    if (!text.empty() && text.back() == '\n') lines.pop_back();

    std::size_t i = 0;
    auto next_line = [&]() -> std::optional<std::string_view> {
        while (i < lines.size()) {
            std::string_view l = lines[i++];
            if (!l.empty() && l.front() == '#') continue;
            return l;
        }
        return std::nullopt;
    };

    const auto header = next_line();
    if (!header) throw ParseError("PCM: missing header line");
    const std::size_t sp = header->find(' ');
    if (sp == std::string_view::npos) throw ParseError("PCM: header must be '<rows> <cols>'");
    const std::size_t rows = detail::parse_count(header->substr(0, sp), "row count");
    const std::size_t cols = detail::parse_count(header->substr(sp + 1), "column count");

    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto line = next_line();
        if (!line) throw ParseError("PCM: expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
        if (line->size() != cols)
            throw ParseError("PCM: row " + std::to_string(r) + " has " + std::to_string(line->size()) +
                             " characters, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = (*line)[c];
            if (ch == '1')
                m.set(r, c);
            else if (ch != '0')
                throw ParseError("PCM: row " + std::to_string(r) + " contains a character other than 0/1");
        }
    }
    while (const auto extra = next_line())
        if (!extra->empty()) throw ParseError("PCM: unexpected content after the last row");
    return m;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace qltc
