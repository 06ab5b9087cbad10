#pragma once

#include "chaingraph/graph.hpp"
#include "chaingraph/quadratic.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace chaingraph {

/// Dense matrix over Q(sqrt5). Graphs here stay far below the size where
/// sparsity would pay off.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("ExactMatrix: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QuadraticNumber& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const QuadraticNumber& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = QuadraticNumber(1);
        return m;
    }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_;
    int cols_;
    std::vector<QuadraticNumber> data_;
};

/// A(g) - lambda*I over Q(sqrt5).
inline ExactMatrix exact_characteristic_matrix(const Graph& g, const QuadraticNumber& lambda) {
    ExactMatrix m(g.n(), g.n());
    for (int v = 0; v < g.n(); ++v) {
        for (int w : g.neighbors(v))
            m.at(v, w) = QuadraticNumber(1);
        m.at(v, v) = -lambda;
    }
    return m;
}

/// Rank over Q(sqrt5) by fractional Gaussian elimination. Pivot is the first
/// row with a nonzero entry in the current column, making the result
/// deterministic for a given input.
inline int exact_rank(ExactMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int c = col; c < cols; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
        const QuadraticNumber inv = m.at(rank, col).inverse();
        for (int c = col; c < cols; ++c)
            m.at(rank, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m.at(r, col).is_zero())
                continue;
            const QuadraticNumber f = m.at(r, col);
            for (int c = col; c < cols; ++c)
                m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

/// Basis of the null space of a square matrix, from the reduced row echelon
/// form: one vector per free column, deterministic. Each basis vector is
/// normalized so its first nonzero entry is 1.
inline std::vector<std::vector<QuadraticNumber>> kernel_basis(ExactMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
        const QuadraticNumber inv = m.at(rank, col).inverse();
        for (int c = 0; c < cols; ++c)
            m.at(rank, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m.at(r, col).is_zero())
                continue;
            const QuadraticNumber f = m.at(r, col);
            for (int c = 0; c < cols; ++c)
                m.at(r, c) -= f * m.at(rank, c);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col)
        is_pivot[c] = true;

    std::vector<std::vector<QuadraticNumber>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<QuadraticNumber> x(cols);
        x[free] = QuadraticNumber(1);
        for (int r = 0; r < rank; ++r)
            x[pivot_col[r]] = -m.at(r, free);
        // First nonzero entry is some pivot coordinate or the free one; scale
        // it to 1 for a canonical representative.
        for (auto& e : x) {
            if (!e.is_zero()) {
                const QuadraticNumber inv = e.inverse();
                for (auto& f : x)
                    f *= inv;
                break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// mul(lambda, g) computed exactly as n - rank(A - lambda*I); lambda need not
/// be an eigenvalue.
inline int exact_multiplicity(const Graph& g, const QuadraticNumber& lambda) {
    return g.n() - exact_rank(exact_characteristic_matrix(g, lambda));
}

/// The unique-up-to-scale exact eigenvector when mul(lambda, g) == 1.
inline std::optional<std::vector<QuadraticNumber>> exact_eigenvector(const Graph& g,
                                                                     const QuadraticNumber& lambda) {
    auto basis = kernel_basis(exact_characteristic_matrix(g, lambda));
    if (basis.size() != 1)
        return std::nullopt;
    return std::move(basis.front());
}

} // namespace chaingraph
