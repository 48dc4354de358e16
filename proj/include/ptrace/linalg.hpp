#pragma once

#include "ptrace/errors.hpp"
#include "ptrace/rational.hpp"

#include <cstddef>
#include <vector>

namespace ptrace {

// Dense matrix of exact rationals. Row-major.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix transposed() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

namespace detail {

// Clears denominators row by row, then runs fraction-free (Bareiss)
// elimination on the integer matrix. Pivot selection is the first row
// with a nonzero entry in the leftmost unfinished column, so the result
// is deterministic for a given row/column order.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>>& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) std::swap(m[piv], m[rank]);
        const BigInt& pivot = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][col] * m[rank][j]) / prev_pivot;
            m[i][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

inline std::vector<BigInt> clear_denominators(const std::vector<Rational>& row) {
    BigInt l = 1;
    for (const auto& r : row) l = boost::multiprecision::lcm(l, den(r));
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (const auto& r : row) out.push_back(num(r) * (l / den(r)));
    return out;
}

} // namespace detail

// Rank of the span of the given coefficient vectors (each a row).
// Throws ValueError on ragged input. budget_bytes, when nonzero, caps a
// rough estimate of the working-set size; exceeding it raises
// ResourceError rather than silently truncating.
inline std::size_t span_dim(const std::vector<std::vector<Rational>>& vectors,
                            std::size_t budget_bytes = 0) {
    if (vectors.empty()) return 0;
    const std::size_t cols = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != cols) throw ValueError("span_dim: vectors of unequal length");
    if (budget_bytes) {
        // 64 bytes per entry is the working assumption for desk-scale inputs
        const std::size_t need = vectors.size() * cols * 64;
        if (need > budget_bytes)
            throw ResourceError("span_dim working set exceeds budget", need, budget_bytes);
    }
    std::vector<std::vector<BigInt>> m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) m.push_back(detail::clear_denominators(v));
    return detail::bareiss_rank(m);
}

inline std::size_t rank(const QMatrix& m, std::size_t budget_bytes = 0) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    return span_dim(rows, budget_bytes);
}

// Integer rank, used by the matroid module where entries are already integral.
inline std::size_t int_rank(std::vector<std::vector<BigInt>> m) {
    return detail::bareiss_rank(m);
}

} // namespace ptrace
