#pragma once

#include <string>
#include <vector>

#include "l1path/problem.hpp"

namespace l1path::cli {

/// Whitespace-trimmed cells of a dense text table: one row per line,
/// separated by commas (or whitespace when a line has no comma), or a JSON
/// array of arrays. Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<std::string>> read_table(const std::string& path);

/// Flattened vector: a single column, a single row, or a JSON array.
std::vector<std::string> read_list(const std::string& path);

std::string read_file(const std::string& path);

template <class T>
Matrix<T> to_matrix(const std::vector<std::vector<std::string>>& cells, const std::string& what) {
    if (cells.empty()) throw ParseError(what + ": empty matrix");
    const auto cols = cells.front().size();
    if (cols == 0) throw ParseError(what + ": empty matrix");
    Matrix<T> m(static_cast<Index>(cells.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() != cols)
            throw ParseError(what + ": row " + std::to_string(i + 1) + " has " + std::to_string(cells[i].size()) +
                             " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m(static_cast<Index>(i), static_cast<Index>(j)) = parse_scalar<T>(cells[i][j]);
            } catch (const ParseError& e) {
                throw ParseError(what + ": row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) + ": " +
                                 e.what());
            }
        }
    }
    return m;
}

template <class T>
Vector<T> to_vector(const std::vector<std::string>& cells, const std::string& what) {
    if (cells.empty()) throw ParseError(what + ": empty vector");
    Vector<T> v(static_cast<Index>(cells.size()));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        try {
            v(static_cast<Index>(i)) = parse_scalar<T>(cells[i]);
        } catch (const ParseError& e) {
            throw ParseError(what + ": entry " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return v;
}

template <class T>
Problem<T> load_problem(const std::string& matrix, const std::string& data, const std::string& weights) {
    Matrix<T> K = to_matrix<T>(read_table(matrix), matrix);
    Vector<T> y = to_vector<T>(read_list(data), data);
    if (weights.empty()) return Problem<T>(std::move(K), std::move(y));
    return Problem<T>(std::move(K), std::move(y), to_vector<T>(read_list(weights), weights));
}

/// Writes a dense matrix as CSV.
template <class T>
std::string matrix_to_csv(const Matrix<T>& m) {
    std::string out;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += format_scalar(m(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content);

} // namespace l1path::cli
