#pragma once

#include "chaingraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaingraph {

/// Every tolerance used by the floating-point paths, passed explicitly.
struct Tolerances {
    double group_tol = 1e-7;        // eigenvalue grouping / nonzero cutoff
    double interlacing_tol = 1e-8;
    double zero_component_tol = 1e-7;
    double jacobi_tol = 1e-12;      // relative off-diagonal target
    int jacobi_sweep_budget = 100;
    double reconstruction_tol = 1e-9;
    double symmetry_tol = 1e-12;    // allowed input asymmetry
    double gap_edge_tol = 1e-9;     // shrink of the (0, 1/2) interval edges
    double exact_value_match_tol = 1e-9; // float eigenvalue -> field element
};

class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalues sorted descending with an aligned orthonormal eigenvector
/// column per eigenvalue (column-major), as produced by eig_symmetric.
struct Spectrum {
    int n = 0;
    std::vector<double> eigenvalues;       // descending
    std::vector<double> vectors;           // vectors[i + n*j]: component i of column j
    double group_tol = 1e-7;

    double vec(int i, int j) const { return vectors[static_cast<size_t>(i) + static_cast<size_t>(n) * j]; }

    std::vector<double> column(int j) const {
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i)
            x[i] = vec(i, j);
        return x;
    }

    /// Single-linkage grouping of the sorted list: a new cluster starts
    /// whenever the gap to the previous eigenvalue exceeds group_tol.
    struct Cluster {
        int begin = 0;  // index range [begin, end) into eigenvalues
        int end = 0;
        double representative = 0.0;
        int size() const { return end - begin; }
    };

    std::vector<Cluster> clusters() const {
        std::vector<Cluster> out;
        for (int i = 0; i < n; ++i) {
            if (out.empty() || eigenvalues[out.back().end - 1] - eigenvalues[i] > group_tol) {
                out.push_back({i, i + 1, eigenvalues[i]});
            } else {
                out.back().end = i + 1;
            }
        }
        for (auto& c : out) {
            double sum = 0;
            for (int i = c.begin; i < c.end; ++i)
                sum += eigenvalues[i];
            c.representative = sum / c.size();
        }
        return out;
    }
};

namespace detail {

inline double max_abs(const std::vector<double>& a) {
    double m = 0;
    for (double x : a)
        m = std::max(m, std::abs(x));
    return m;
}

inline double off_diagonal_frobenius(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
    return std::sqrt(s);
}

} // namespace detail

/// Dense symmetric eigensolver: cyclic Jacobi rotations in fixed row-major
/// sweep order, so the output is deterministic for a fixed input. Converges
/// when the off-diagonal Frobenius norm drops below
/// jacobi_tol * (1 + frobenius(A)); throws NumericalFailure if the sweep
/// budget runs out, and validates the reconstruction and orthonormality
/// residuals before returning.
inline Spectrum eig_symmetric(std::vector<double> a, int n, const Tolerances& tol = {}) {
    if (n < 1 || static_cast<size_t>(n) * n != a.size())
        throw std::invalid_argument("eig_symmetric: bad dimensions");
    const std::vector<double> original = a;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(a[static_cast<size_t>(i) * n + j] - a[static_cast<size_t>(j) * n + i]) >
                tol.symmetry_tol)
                throw std::invalid_argument("eig_symmetric: matrix not symmetric");

    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

    double fro = 0;
    for (double x : a)
        fro += x * x;
    fro = std::sqrt(fro);
    const double target = tol.jacobi_tol * (1.0 + fro);

    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        v[idx(i, i)] = 1.0;

    bool converged = detail::off_diagonal_frobenius(a, n) <= target;
    for (int sweep = 0; sweep < tol.jacobi_sweep_budget && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[idx(p, q)];
                if (apq == 0.0)
                    continue;
                const double app = a[idx(p, p)];
                const double aqq = a[idx(q, q)];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    const double aip = a[idx(i, p)];
                    const double aiq = a[idx(i, q)];
                    a[idx(i, p)] = c * aip - s * aiq;
                    a[idx(i, q)] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a[idx(p, i)];
                    const double aqi = a[idx(q, i)];
                    a[idx(p, i)] = c * api - s * aqi;
                    a[idx(q, i)] = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v[idx(i, p)];
                    const double viq = v[idx(i, q)];
                    v[idx(i, p)] = c * vip - s * viq;
                    v[idx(i, q)] = s * vip + c * viq;
                }
            }
        }
        converged = detail::off_diagonal_frobenius(a, n) <= target;
    }
    if (!converged)
        throw NumericalFailure("eig_symmetric: Jacobi sweeps did not converge within budget");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (a[idx(x, x)] != a[idx(y, y)])
            return a[idx(x, x)] > a[idx(y, y)];
        return x < y;
    });

    Spectrum s;
    s.n = n;
    s.group_tol = tol.group_tol;
    s.eigenvalues.resize(n);
    s.vectors.resize(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        s.eigenvalues[j] = a[idx(order[j], order[j])];
        for (int i = 0; i < n; ++i)
            s.vectors[static_cast<size_t>(i) + static_cast<size_t>(n) * j] = v[idx(i, order[j])];
    }

    // Reconstruction and orthonormality residuals must hold or the result is
    // not trustworthy for multiplicity work.
    const double scale = 1.0 + detail::max_abs(original);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double recon = 0, gram = 0;
            for (int m = 0; m < n; ++m) {
                recon += s.vec(i, m) * s.eigenvalues[m] * s.vec(j, m);
                gram += s.vec(m, i) * s.vec(m, j);
            }
            if (std::abs(recon - original[idx(i, j)]) > tol.reconstruction_tol * scale)
                throw NumericalFailure("eig_symmetric: reconstruction residual too large");
            if (std::abs(gram - (i == j ? 1.0 : 0.0)) > tol.reconstruction_tol)
                throw NumericalFailure("eig_symmetric: eigenvectors not orthonormal");
        }
    }
    return s;
}

inline std::vector<double> dense_adjacency(const Graph& g) {
    const int n = g.n();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            a[static_cast<size_t>(v) * n + w] = 1.0;
    return a;
}

inline Spectrum graph_spectrum(const Graph& g, const Tolerances& tol = {}) {
    return eig_symmetric(dense_adjacency(g), g.n(), tol);
}

/// Count of eigenvalues within group_tol of lambda. `ambiguous` is set when
/// lambda sits near the membership boundary of some cluster — within a factor
/// of three of group_tol on either side — so a caller may prefer the exact
/// multiplicity instead.
struct FloatMultiplicity {
    int count = 0;
    bool ambiguous = false;
};

inline FloatMultiplicity float_multiplicity(const Spectrum& s, double lambda) {
    FloatMultiplicity out;
    for (double e : s.eigenvalues)
        if (std::abs(e - lambda) <= s.group_tol)
            ++out.count;
    for (const auto& c : s.clusters()) {
        const double lo = s.eigenvalues[c.end - 1];
        const double hi = s.eigenvalues[c.begin];
        const double d = lambda < lo ? lo - lambda : (lambda > hi ? lambda - hi : 0.0);
        if (d > s.group_tol / 3.0 && d < 3.0 * s.group_tol)
            out.ambiguous = true;
    }
    return out;
}

/// Cauchy interlacing between a graph and an induced subgraph:
/// parent[i] + tol >= child[i] and child[i] + tol >= parent[n-m+i].
inline bool check_interlacing(const std::vector<double>& parent, const std::vector<double>& child,
                              double tol = 1e-8) {
    const int n = static_cast<int>(parent.size());
    const int m = static_cast<int>(child.size());
    if (m >= n)
        throw std::invalid_argument("check_interlacing: child must be strictly smaller");
    for (int i = 0; i < m; ++i) {
        if (parent[i] + tol < child[i])
            return false;
        if (child[i] + tol < parent[n - m + i])
            return false;
    }
    return true;
}

inline bool check_interlacing(const Spectrum& parent, const Spectrum& child, double tol = 1e-8) {
    return check_interlacing(parent.eigenvalues, child.eigenvalues, tol);
}

} // namespace chaingraph
