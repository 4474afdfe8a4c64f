#include "duadic/matrix.hpp"

#include <algorithm>

namespace duadic {

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        }
        const Elem inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const Elem factor = m.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < m.cols; ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

Matrix kernel(const Field& f, const Matrix& m) {
    Matrix e = m;
    const auto pivots = rref(f, e);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out(m.cols - pivots.size(), m.cols);
    std::size_t row = 0;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        out.at(row, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out.at(row, pivots[i]) = f.neg(e.at(i, free));
        ++row;
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows + b.rows, a.cols);
    std::copy(a.data.begin(), a.data.end(), out.data.begin());
    std::copy(b.data.begin(), b.data.end(), out.data.begin() + static_cast<std::ptrdiff_t>(a.data.size()));
    return out;
}

bool same_row_space(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) return false;
    const std::size_t ra = rank(f, a);
    if (ra != rank(f, b)) return false;
    return rank(f, vstack(a, b)) == ra;
}

Matrix power_entries(const Field& f, const Matrix& m, std::uint64_t e) {
    Matrix out = m;
    for (auto& x : out.data) x = f.pow(x, e);
    return out;
}

Matrix gram(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix out(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const auto ra = a.row(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const auto rb = b.row(j);
            Elem acc = 0;
            for (std::size_t c = 0; c < a.cols; ++c) acc = f.add(acc, f.mul(ra[c], rb[c]));
            out.at(i, j) = acc;
        }
    }
    return out;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
    Matrix out(m.rows, cols.size());
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = m.at(i, cols[j]);
    }
    return out;
}

std::size_t weight(std::span<const Elem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

}  // namespace duadic
