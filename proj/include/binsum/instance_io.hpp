#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "binsum/types.hpp"

namespace binsum {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct RawInstance {
    std::vector<sum_t> values; // as written, unsorted
    sum_t target = 0;
};

/// Instance text format: first line "n T", then n whitespace-separated
/// positive integers (any line breaks). Lines starting with '#' are comments.
inline RawInstance parse_instance(std::istream& in) {
    std::vector<sum_t> numbers;
    std::vector<int> number_lines;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            sum_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "expected an integer, got '" + tok + "'");
            numbers.push_back(v);
            number_lines.push_back(line_no);
        }
    }
    if (numbers.size() < 2) throw ParseError(line_no, "missing 'n T' header");
    sum_t n = numbers[0];
    if (n < 0) throw ParseError(number_lines[0], "value count must be non-negative");
    if (static_cast<std::size_t>(n) + 2 != numbers.size()) {
        int at = numbers.size() > 2 ? number_lines.back() : number_lines[1];
        throw ParseError(at, "expected exactly " + std::to_string(n) + " values, got " +
                                 std::to_string(numbers.size() - 2));
    }
    RawInstance raw;
    raw.target = numbers[1];
    raw.values.assign(numbers.begin() + 2, numbers.end());
    return raw;
}

inline RawInstance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_instance(in);
}

/// Canonical form: "n T" header, then values eight per line, in given order.
inline void write_instance(std::ostream& out, const RawInstance& raw) {
    out << raw.values.size() << ' ' << raw.target << '\n';
    for (std::size_t i = 0; i < raw.values.size(); ++i)
        out << raw.values[i] << (i % 8 == 7 || i + 1 == raw.values.size() ? '\n' : ' ');
}

inline void write_instance_file(const std::string& path, const RawInstance& raw) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_instance(out, raw);
}

/// FNV-1a over the canonical bytes; stable across runs and platforms.
inline std::uint64_t instance_digest(const RawInstance& raw) {
    std::ostringstream buf;
    write_instance(buf, raw);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : buf.str()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace binsum
