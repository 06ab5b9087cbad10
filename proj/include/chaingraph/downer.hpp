#pragma once

#include "chaingraph/exact_matrix.hpp"
#include "chaingraph/graph.hpp"
#include "chaingraph/spectrum.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace chaingraph {

/// An eigenvalue candidate: always carries a double approximation, and an
/// exact field element whenever one is known. Exact arithmetic is the source
/// of truth when present; the float value drives screening elsewhere.
struct Lambda {
    std::optional<QuadraticNumber> exact;
    double value = 0.0;

    static Lambda from_exact(const QuadraticNumber& q) { return {q, q.to_double()}; }
    static Lambda from_double(double d) { return {std::nullopt, d}; }

    std::string to_string() const { return exact ? exact->to_string() : std::to_string(value); }
};

/// Matches a floating eigenvalue against the four exactly-representable
/// nonzero eigenvalues of interest: 1, -1, w, -w.
inline std::optional<QuadraticNumber> recognize_exact_eigenvalue(double x, double tol) {
    const QuadraticNumber w = QuadraticNumber::inverse_golden_ratio();
    const QuadraticNumber candidates[] = {QuadraticNumber(1), QuadraticNumber(-1), w, -w};
    for (const auto& c : candidates)
        if (std::abs(x - c.to_double()) <= tol)
            return c;
    return std::nullopt;
}

/// Max-abs violation of lambda*x(v) = sum over neighbors u of x(u).
inline double sum_rule_residual(const Graph& g, const std::vector<double>& x, double lambda) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("sum_rule_residual: vector length mismatch");
    double worst = 0.0;
    for (int v = 0; v < g.n(); ++v) {
        double acc = 0.0;
        for (int u : g.neighbors(v))
            acc += x[u];
        worst = std::max(worst, std::abs(lambda * x[v] - acc));
    }
    return worst;
}

/// Exact sum-rule test over Q(sqrt5): true iff lambda*x(v) - sum x(u) is the
/// field zero at every vertex.
inline bool sum_rule_exact(const Graph& g, const std::vector<QuadraticNumber>& x,
                           const QuadraticNumber& lambda) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("sum_rule_exact: vector length mismatch");
    for (int v = 0; v < g.n(); ++v) {
        QuadraticNumber acc(0);
        for (int u : g.neighbors(v))
            acc += x[u];
        if (lambda * x[v] != acc)
            return false;
    }
    return true;
}

enum class Mode { Exact, Float, Hybrid };

inline const char* mode_name(Mode m) {
    switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Float: return "float";
    default: return "hybrid";
    }
}

struct VertexVerdict {
    int vertex = 0;
    std::string name;
    int mul_child = 0;
    bool downer = false;
    bool ambiguous = false; // float verdict could not be pinned down
};

/// Per-vertex downer classification of one eigenvalue: v is downer iff
/// mul(lambda, G - v) = mul(lambda, G) - 1.
struct DownerReport {
    Lambda lambda;
    Mode mode = Mode::Exact;
    int mul_parent = 0;
    bool any_ambiguous = false;
    std::vector<VertexVerdict> vertices;
    // Attached when mul_parent == 1: the certificate eigenvector whose zero
    // pattern is exactly the non-downer set.
    std::optional<std::vector<QuadraticNumber>> exact_eigenvector;
    std::optional<std::vector<double>> float_eigenvector;

    std::vector<int> non_downer_vertices() const {
        std::vector<int> out;
        for (const auto& v : vertices)
            if (!v.downer)
                out.push_back(v.vertex);
        return out;
    }

    std::vector<std::string> non_downer_names() const {
        std::vector<std::string> out;
        for (const auto& v : vertices)
            if (!v.downer)
                out.push_back(v.name);
        return out;
    }
};

namespace detail {

/// Scale to unit norm with the first significantly-nonzero component
/// positive, so zero-component tests are scale-free.
inline std::vector<double> normalize_eigenvector(std::vector<double> x) {
    double norm = 0;
    for (double e : x)
        norm += e * e;
    norm = std::sqrt(norm);
    if (norm == 0)
        return x;
    double sign = 1.0;
    for (double e : x) {
        if (std::abs(e) > 1e-9) {
            sign = e < 0 ? -1.0 : 1.0;
            break;
        }
    }
    for (double& e : x)
        e = e * sign / norm;
    return x;
}

} // namespace detail

inline DownerReport downer_classify(const Graph& g, const Lambda& lambda, Mode mode,
                                    const Tolerances& tol = {}) {
    DownerReport report;
    report.lambda = lambda;

    const bool exact_mode = (mode == Mode::Exact || mode == Mode::Hybrid) && lambda.exact.has_value();
    if (mode == Mode::Exact && !lambda.exact)
        throw std::invalid_argument("downer_classify: exact mode needs a field-representable lambda");
    report.mode = exact_mode ? Mode::Exact : Mode::Float;

    if (exact_mode) {
        const QuadraticNumber& lam = *lambda.exact;
        report.mul_parent = exact_multiplicity(g, lam);
        if (report.mul_parent == 1)
            report.exact_eigenvector = exact_eigenvector(g, lam);
        for (int v = 0; v < g.n(); ++v) {
            const Graph child = delete_vertex(g, v);
            VertexVerdict verdict;
            verdict.vertex = v;
            verdict.name = g.vertex_name(v);
            verdict.mul_child = exact_multiplicity(child, lam);
            verdict.downer = verdict.mul_child == report.mul_parent - 1;
            // The zero-component characterization needs a simple *nonzero*
            // eigenvalue; deleting a vertex can raise the multiplicity of 0.
            if (report.mul_parent == 1 && report.exact_eigenvector && !lam.is_zero()) {
                // With a simple eigenvalue, a zero component at v is
                // equivalent to v not being downer; if the two disagree the
                // linear algebra is broken, not the graph.
                const bool zero_at_v = (*report.exact_eigenvector)[v].is_zero();
                if (zero_at_v == verdict.downer)
                    throw std::logic_error(
                        "downer_classify: zero-component certificate contradicts multiplicity drop");
                if (!verdict.downer) {
                    // Equality-case cross-check: the child eigenvector
                    // extended by a zero at v must solve the parent sum rule.
                    auto child_vec = exact_eigenvector(child, lam);
                    if (child_vec) {
                        std::vector<QuadraticNumber> extended;
                        extended.reserve(g.n());
                        int w = 0;
                        for (int u = 0; u < g.n(); ++u)
                            extended.push_back(u == v ? QuadraticNumber(0) : (*child_vec)[w++]);
                        if (!sum_rule_exact(g, extended, lam))
                            throw std::logic_error(
                                "downer_classify: zero-extension of child eigenvector is not an eigenvector");
                    }
                }
            }
            report.vertices.push_back(std::move(verdict));
        }
        return report;
    }

    // Float path with escalation on tolerance-ambiguous counts.
    const Spectrum parent = graph_spectrum(g, tol);
    FloatMultiplicity mp = float_multiplicity(parent, lambda.value);
    if (mp.ambiguous && lambda.exact)
        mp = {exact_multiplicity(g, *lambda.exact), false};
    report.mul_parent = mp.count;
    report.any_ambiguous = mp.ambiguous;

    int parent_col = -1;
    if (mp.count == 1 && std::abs(lambda.value) > tol.group_tol) {
        for (int j = 0; j < parent.n; ++j)
            if (std::abs(parent.eigenvalues[j] - lambda.value) <= parent.group_tol)
                parent_col = j;
        if (parent_col >= 0)
            report.float_eigenvector = detail::normalize_eigenvector(parent.column(parent_col));
    }

    for (int v = 0; v < g.n(); ++v) {
        const Graph child = delete_vertex(g, v);
        const Spectrum child_spectrum = graph_spectrum(child, tol);
        FloatMultiplicity mc = float_multiplicity(child_spectrum, lambda.value);
        if (mc.ambiguous && lambda.exact)
            mc = {exact_multiplicity(child, *lambda.exact), false};
        VertexVerdict verdict;
        verdict.vertex = v;
        verdict.name = g.vertex_name(v);
        verdict.mul_child = mc.count;
        verdict.downer = mc.count == report.mul_parent - 1;
        verdict.ambiguous = mc.ambiguous;
        if (report.float_eigenvector) {
            const bool zero_at_v =
                std::abs((*report.float_eigenvector)[v]) <= tol.zero_component_tol;
            if (zero_at_v == verdict.downer)
                verdict.ambiguous = true; // certificate and count disagree at tolerance
        }
        report.any_ambiguous = report.any_ambiguous || verdict.ambiguous;
        report.vertices.push_back(std::move(verdict));
    }
    return report;
}

/// Checks that every maximum-degree vertex (the cells U_1 and V_1) is downer
/// for every nonzero eigenvalue. A false return is a counterexample to a
/// theorem, i.e. an artifact bug, never a property of the input.
inline bool verify_max_degree_downer(const ChainGraphSpec& spec, Mode mode,
                                     const Tolerances& tol = {}) {
    const Graph g = build_chain_graph(spec);
    const Spectrum parent = graph_spectrum(g, tol);
    const auto clusters = parent.clusters();

    std::vector<int> front_vertices;
    for (int v = 0; v < g.n(); ++v)
        if (g.label(v).cell == 1)
            front_vertices.push_back(v);

    for (int v : front_vertices) {
        const Graph child = delete_vertex(g, v);
        const Spectrum child_spectrum = graph_spectrum(child, tol);
        for (const auto& c : clusters) {
            if (std::abs(c.representative) <= tol.group_tol)
                continue;
            int mul_parent = c.size();
            int mul_child = float_multiplicity(child_spectrum, c.representative).count;
            if (mode != Mode::Float) {
                if (auto lam = recognize_exact_eigenvalue(c.representative, tol.exact_value_match_tol)) {
                    mul_parent = exact_multiplicity(g, *lam);
                    mul_child = exact_multiplicity(child, *lam);
                }
            }
            if (mul_child != mul_parent - 1)
                return false;
        }
    }
    return true;
}

/// Certifies the eigenvalue-free band around +-1/2: ok iff no eigenvalue of
/// the spectrum falls in (group_tol, 1/2 - gap_edge_tol) or its mirror
/// interval. Also reports the eigenvalue closest to that forbidden band.
struct GapCheckReport {
    bool ok = true;
    double closest_to_gap = 0.0;
};

inline GapCheckReport eigenvalue_gap_check(const Spectrum& s, const Tolerances& tol = {}) {
    const double lo = tol.group_tol;
    const double hi = 0.5 - tol.gap_edge_tol;
    GapCheckReport report;
    double best = -1.0;
    for (double e : s.eigenvalues) {
        const double m = std::abs(e);
        double dist;
        if (m > lo && m < hi) {
            report.ok = false;
            dist = 0.0;
        } else {
            dist = m <= lo ? lo - m : m - hi;
        }
        if (best < 0 || dist < best) {
            best = dist;
            report.closest_to_gap = e;
        }
    }
    return report;
}

} // namespace chaingraph
