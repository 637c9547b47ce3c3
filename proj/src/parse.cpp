#include "ortho/parse.hpp"

#include <cctype>

namespace ortho {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    long read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw parse_error("expected a nonnegative integer", start);
        return std::stol(text.substr(start, pos - start));
    }
};

} // namespace

ExponentMatrix parse_matrix(const std::string& text) {
    Cursor c{text};
    if (c.done()) throw parse_error("empty matrix", 0);
    std::vector<std::vector<long>> rows;
    for (;;) {
        std::vector<long> row;
        for (;;) {
            row.push_back(c.read_integer());
            if (c.peek() != ',') break;
            ++c.pos;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error("ragged rows", c.pos);
        rows.push_back(std::move(row));
        if (c.peek() != ';') break;
        ++c.pos;
    }
    if (!c.done()) throw parse_error("trailing characters", c.pos);
    return ExponentMatrix(std::move(rows));
}

std::vector<long> parse_vector(const std::string& text) {
    Cursor c{text};
    if (c.done()) throw parse_error("empty vector", 0);
    std::vector<long> out;
    for (;;) {
        out.push_back(c.read_integer());
        if (c.peek() != ',') break;
        ++c.pos;
    }
    if (!c.done()) throw parse_error("trailing characters", c.pos);
    return out;
}

std::pair<long, long> parse_n_range(const std::string& text) {
    Cursor c{text};
    if (c.done()) throw parse_error("empty range", 0);
    long lo = c.read_integer();
    long hi = lo;
    if (c.peek() == ':') {
        ++c.pos;
        hi = c.read_integer();
    }
    if (!c.done()) throw parse_error("trailing characters", c.pos);
    if (hi < lo) throw parse_error("range upper bound below lower bound", 0);
    return {lo, hi};
}

} // namespace ortho
