#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "duadic/field.hpp"

namespace duadic {

/// Dense row-major matrix of field elements.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    [[nodiscard]] Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    [[nodiscard]] Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    [[nodiscard]] std::span<Elem> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    [[nodiscard]] std::span<const Elem> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// In-place reduced row echelon form; returns pivot columns. Zero rows are
/// moved to the bottom.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis (as rows) of {x : m * x^T = 0}.
Matrix kernel(const Field& f, const Matrix& m);

/// Row spaces equal (same rank and rank of the stacked matrix unchanged).
bool same_row_space(const Field& f, const Matrix& a, const Matrix& b);

/// Entrywise map x -> x^e.
Matrix power_entries(const Field& f, const Matrix& m, std::uint64_t e);

/// a * b^T.
Matrix gram(const Field& f, const Matrix& a, const Matrix& b);

Matrix vstack(const Matrix& a, const Matrix& b);

/// Columns selected in the given order.
Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);

/// Hamming weight of a vector.
std::size_t weight(std::span<const Elem> v);

}  // namespace duadic
