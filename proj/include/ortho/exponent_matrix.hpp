#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ortho/errors.hpp"

namespace ortho {

// p x q grid of nonnegative integer exponents, the argument of I(a).
// The empty matrix represents the 0-factor integral (value 1).
struct ExponentMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long> entries; // row-major, rows*cols

    ExponentMatrix() = default;
    ExponentMatrix(int p, int q) : rows(p), cols(q), entries(p * q, 0) {
        if (p < 0 || q < 0) throw contract_error("ExponentMatrix: negative dimensions");
    }
    explicit ExponentMatrix(const std::vector<std::vector<long>>& m) {
        fill_from(m);
    }
    ExponentMatrix(std::initializer_list<std::initializer_list<long>> m) {
        std::vector<std::vector<long>> rows_vec;
        for (const auto& row : m) rows_vec.emplace_back(row);
        fill_from(rows_vec);
    }

    long& at(int i, int j) { return entries[i * cols + j]; }
    long at(int i, int j) const { return entries[i * cols + j]; }

    long total_degree() const {
        long s = 0;
        for (long v : entries) s += v;
        return s;
    }

    bool empty() const { return entries.empty(); }

    ExponentMatrix transposed() const {
        ExponentMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // "a11,a12;a21,a22"
    std::string str() const {
        std::string out;
        for (int i = 0; i < rows; ++i) {
            if (i) out += ';';
            for (int j = 0; j < cols; ++j) {
                if (j) out += ',';
                out += std::to_string(at(i, j));
            }
        }
        return out;
    }

    friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }

private:
    void fill_from(const std::vector<std::vector<long>>& m) {
        rows = static_cast<int>(m.size());
        cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != cols)
                throw contract_error("ExponentMatrix: ragged rows");
            for (long v : row) {
                if (v < 0) throw contract_error("ExponentMatrix: negative exponent");
                entries.push_back(v);
            }
        }
    }
};

// True iff every row sum and every column sum is even; I(a) vanishes otherwise.
bool admissible(const ExponentMatrix& a);

} // namespace ortho
