#pragma once

#include "chaingraph/spectrum.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chaingraph {

/// The bipartite adjacency block of the half graph on 2k vertices, with the
/// second color class numbered in reverse: C[i][j] = 1 iff i <= j (1-based).
/// That column order is what makes C + C^T = J + I hold entrywise; the Gram
/// matrix CC^T is unchanged by it.
struct StaircaseBlock {
    int k = 0;
    std::vector<std::int64_t> c; // row-major k x k

    static StaircaseBlock make(int k) {
        if (k < 1)
            throw std::invalid_argument("StaircaseBlock: k must be >= 1");
        StaircaseBlock b;
        b.k = k;
        b.c.assign(static_cast<size_t>(k) * k, 0);
        for (int i = 1; i <= k; ++i)
            for (int j = i; j <= k; ++j)
                b.c[static_cast<size_t>(i - 1) * k + (j - 1)] = 1;
        return b;
    }

    std::int64_t at(int i, int j) const { return c[static_cast<size_t>(i) * k + j]; }
};

struct PsdIdentityReport {
    bool identity_ok = false;
    double min_gram_eigenvalue = 0.0;
};

namespace detail {

inline std::vector<std::int64_t> int_matmul(const std::vector<std::int64_t>& a,
                                            const std::vector<std::int64_t>& b, int n) {
    std::vector<std::int64_t> out(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
            const std::int64_t aim = a[static_cast<size_t>(i) * n + m];
            if (aim == 0)
                continue;
            for (int j = 0; j < n; ++j)
                out[static_cast<size_t>(i) * n + j] += aim * b[static_cast<size_t>(m) * n + j];
        }
    return out;
}

inline std::vector<std::int64_t> int_transpose(const std::vector<std::int64_t>& a, int n) {
    std::vector<std::int64_t> out(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(j) * n + i] = a[static_cast<size_t>(i) * n + j];
    return out;
}

} // namespace detail

/// Exact integer verification that, for the staircase block C,
///   4CC^T - 2C - 2C^T + I  =  (2C - I)(2C - I)^T  =  4CC^T - I - 2J,
/// followed by the minimum eigenvalue of the Gram matrix CC^T, which stays
/// at or above 1/4 — this is what keeps half-graph eigenvalues out of
/// (-1/2, 1/2).
inline PsdIdentityReport psd_identity_check(int k, const Tolerances& tol = {}) {
    const StaircaseBlock b = StaircaseBlock::make(k);
    const auto& c = b.c;
    const auto ct = detail::int_transpose(c, k);
    const auto cct = detail::int_matmul(c, ct, k);

    auto at = [k](const std::vector<std::int64_t>& m, int i, int j) {
        return m[static_cast<size_t>(i) * k + j];
    };

    bool ok = true;
    // C + C^T = J + I
    for (int i = 0; i < k && ok; ++i)
        for (int j = 0; j < k && ok; ++j)
            if (at(c, i, j) + at(ct, i, j) != 1 + (i == j ? 1 : 0))
                ok = false;

    // (2C - I)(2C - I)^T
    std::vector<std::int64_t> twoc_minus_i(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            twoc_minus_i[static_cast<size_t>(i) * k + j] = 2 * at(c, i, j) - (i == j ? 1 : 0);
    const auto product = detail::int_matmul(twoc_minus_i, detail::int_transpose(twoc_minus_i, k), k);

    for (int i = 0; i < k && ok; ++i)
        for (int j = 0; j < k && ok; ++j) {
            const std::int64_t lhs1 =
                4 * at(cct, i, j) - 2 * at(c, i, j) - 2 * at(ct, i, j) + (i == j ? 1 : 0);
            const std::int64_t lhs2 = 4 * at(cct, i, j) - (i == j ? 1 : 0) - 2;
            if (lhs1 != at(product, i, j) || lhs2 != at(product, i, j))
                ok = false;
        }

    std::vector<double> gram(static_cast<size_t>(k) * k);
    for (size_t i = 0; i < gram.size(); ++i)
        gram[i] = static_cast<double>(cct[i]);
    const Spectrum s = eig_symmetric(gram, k, tol);

    return {ok, s.eigenvalues.back()};
}

} // namespace chaingraph
