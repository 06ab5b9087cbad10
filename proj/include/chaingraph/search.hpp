#pragma once

#include "chaingraph/downer.hpp"
#include "chaingraph/enumerate.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace chaingraph {

/// Enumeration-driven hunt for vertices that are NOT downer for some nonzero
/// eigenvalue. Hybrid mode screens with floating spectra and confirms hits in
/// exact arithmetic whenever the eigenvalue lies in Q(sqrt5).
struct SearchJob {
    int max_n = 2;
    Mode mode = Mode::Hybrid;
    std::vector<QuadraticNumber> lambda_filter; // empty = no restriction
    int workers = 1;
    bool half_graphs_only = false;
};

/// One conjecture violation: a nonzero eigenvalue whose multiplicity survives
/// the deletion of `vertex` (mul_child == mul_parent >= 1).
struct CounterexampleRecord {
    ChainGraphSpec spec;
    int vertex = 0;
    std::string vertex_name;
    Lambda lambda;
    int mul_parent = 0;
    int mul_child = 0;
    bool exact_confirmed = false;
    std::vector<QuadraticNumber> exact_certificate; // eigenvector, when mul == 1
    std::vector<double> float_certificate;
};

struct SearchResult {
    std::vector<CounterexampleRecord> records;     // re-verified before emission
    std::vector<CounterexampleRecord> unconfirmed; // float-only or near-tolerance hits
};

namespace detail {

/// Runs fn(0..count-1) across `workers` threads; callers own any ordering of
/// the results (indexed output slots keep merges deterministic).
template <class Fn>
void parallel_index(size_t count, int workers, Fn fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            fn(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(run);
    for (auto& t : pool)
        t.join();
}

/// Exact confirmation of a float candidate. Returns true and fills the record
/// only if the multiplicities really match and, for a simple eigenvalue, the
/// certificate eigenvector satisfies the sum rule and vanishes at the vertex.
inline bool confirm_exact(const Graph& g, const Graph& child, int v, const QuadraticNumber& lam,
                          CounterexampleRecord& rec) {
    const int mp = exact_multiplicity(g, lam);
    if (mp < 1)
        return false;
    const int mc = exact_multiplicity(child, lam);
    if (mc != mp)
        return false;
    rec.lambda = Lambda::from_exact(lam);
    rec.mul_parent = mp;
    rec.mul_child = mc;
    rec.exact_confirmed = true;
    if (mp == 1) {
        auto x = exact_eigenvector(g, lam);
        if (!x || !sum_rule_exact(g, *x, lam) || !(*x)[v].is_zero())
            return false;
        rec.exact_certificate = std::move(*x);
    }
    return true;
}

inline SearchResult search_one_spec(const ChainGraphSpec& spec, const SearchJob& job,
                                    const Tolerances& tol) {
    SearchResult out;
    const Graph g = build_chain_graph(spec);

    if (job.mode == Mode::Exact) {
        std::vector<QuadraticNumber> candidates = job.lambda_filter;
        if (candidates.empty()) {
            const QuadraticNumber w = QuadraticNumber::inverse_golden_ratio();
            candidates = {QuadraticNumber(1), QuadraticNumber(-1), w, -w};
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const QuadraticNumber& a, const QuadraticNumber& b) {
                      return a.to_double() > b.to_double();
                  });
        std::vector<std::pair<QuadraticNumber, int>> live; // eigenvalues actually present
        for (const auto& lam : candidates)
            if (!lam.is_zero()) {
                const int mp = exact_multiplicity(g, lam);
                if (mp >= 1)
                    live.emplace_back(lam, mp);
            }
        if (live.empty())
            return out;
        for (int v = 0; v < g.n(); ++v) {
            const Graph child = delete_vertex(g, v);
            for (const auto& [lam, mp] : live) {
                if (exact_multiplicity(child, lam) != mp)
                    continue;
                CounterexampleRecord rec;
                rec.spec = spec;
                rec.vertex = v;
                rec.vertex_name = g.vertex_name(v);
                if (confirm_exact(g, child, v, lam, rec))
                    out.records.push_back(std::move(rec));
            }
        }
        return out;
    }

    const Spectrum parent = graph_spectrum(g, tol);
    std::vector<Spectrum::Cluster> clusters;
    for (const auto& c : parent.clusters()) {
        if (std::abs(c.representative) <= tol.group_tol)
            continue;
        if (!job.lambda_filter.empty()) {
            bool wanted = false;
            for (const auto& f : job.lambda_filter)
                if (std::abs(f.to_double() - c.representative) <= tol.exact_value_match_tol)
                    wanted = true;
            if (!wanted)
                continue;
        }
        clusters.push_back(c);
    }
    if (clusters.empty())
        return out;
    for (int v = 0; v < g.n(); ++v) {
        const Graph child = delete_vertex(g, v);
        const Spectrum child_spectrum = graph_spectrum(child, tol);
        for (const auto& c : clusters) {
            const FloatMultiplicity mc = float_multiplicity(child_spectrum, c.representative);
            if (mc.count != c.size())
                continue;

            CounterexampleRecord rec;
            rec.spec = spec;
            rec.vertex = v;
            rec.vertex_name = g.vertex_name(v);
            rec.lambda = Lambda::from_double(c.representative);
            rec.mul_parent = c.size();
            rec.mul_child = mc.count;
            if (c.size() == 1)
                rec.float_certificate = detail::normalize_eigenvector(parent.column(c.begin));

            const auto lam = recognize_exact_eigenvalue(c.representative, tol.exact_value_match_tol);
            if (job.mode == Mode::Hybrid) {
                if (lam && confirm_exact(g, child, v, *lam, rec)) {
                    out.records.push_back(std::move(rec));
                } else if (!lam) {
                    // Not exactly representable here; keep it, honestly apart.
                    if (!mc.ambiguous)
                        out.unconfirmed.push_back(std::move(rec));
                }
                // Representable but refuted exactly: a tolerance artifact, dropped.
                continue;
            }
            // Float mode: re-verify within floating arithmetic only.
            bool clean = !mc.ambiguous && !float_multiplicity(parent, c.representative).ambiguous;
            if (clean && c.size() == 1)
                clean = sum_rule_residual(g, rec.float_certificate, c.representative) <=
                            10 * tol.zero_component_tol &&
                        std::abs(rec.float_certificate[v]) <= tol.zero_component_tol;
            if (clean && lam)
                out.records.push_back(std::move(rec));
            else
                out.unconfirmed.push_back(std::move(rec));
        }
    }
    return out;
}

} // namespace detail

/// Runs the search over every chain-graph spec within the vertex budget.
/// Output order is deterministic: enumeration order, then vertex id, then
/// eigenvalue descending; worker parallelism only shards the spec list and
/// merges results back in order.
inline SearchResult find_non_downer(const SearchJob& job, const Tolerances& tol = {}) {
    if (job.max_n < 2)
        throw std::invalid_argument("find_non_downer: max_n must be >= 2");
    std::vector<ChainGraphSpec> specs;
    if (job.half_graphs_only) {
        // H(k) is the only half graph on 2k vertices, so the restricted
        // enumeration is just ascending k (same order the full stream gives).
        for (int k = 1; 2 * k <= job.max_n; ++k)
            specs.push_back(ChainGraphSpec::half_graph(k));
    } else {
        for_each_chain_spec(job.max_n,
                            [&](const ChainGraphSpec& s) { specs.push_back(s); });
    }

    std::vector<SearchResult> per_spec(specs.size());
    detail::parallel_index(specs.size(), job.workers,
                           [&](size_t i) { per_spec[i] = detail::search_one_spec(specs[i], job, tol); });

    SearchResult merged;
    for (auto& r : per_spec) {
        for (auto& rec : r.records)
            merged.records.push_back(std::move(rec));
        for (auto& rec : r.unconfirmed)
            merged.unconfirmed.push_back(std::move(rec));
    }
    return merged;
}

/// First conjecture violation in the global enumeration order, if any exists
/// within the vertex budget.
inline std::optional<CounterexampleRecord> smallest_counterexample(int max_n,
                                                                   const Tolerances& tol = {}) {
    SearchJob job;
    job.max_n = max_n;
    job.mode = Mode::Hybrid;
    const SearchResult result = find_non_downer(job, tol);
    if (result.records.empty())
        return std::nullopt;
    return result.records.front();
}

} // namespace chaingraph
