#pragma once

#include "chaingraph/graph.hpp"

#include <functional>
#include <vector>

namespace chaingraph {

namespace detail {

/// Compositions of `total` into `parts` positive parts, lexicographic order.
inline void for_each_composition(int total, int parts, std::vector<int>& prefix,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        prefix.push_back(total);
        fn(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 1; first <= total - (parts - 1); ++first) {
        prefix.push_back(first);
        for_each_composition(total - first, parts - 1, prefix, fn);
        prefix.pop_back();
    }
}

} // namespace detail

/// Every chain-graph spec with total() <= max_n, each exactly once, ordered by
/// total vertex count, then k, then lexicographically by u_sizes, then
/// v_sizes. The two color classes are kept distinguished: swapped specs give
/// isomorphic graphs but are emitted separately.
inline void for_each_chain_spec(int max_n, const std::function<void(const ChainGraphSpec&)>& fn) {
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            // u_sizes ranges over compositions of every feasible U total; the
            // V side gets the remainder. Lex order over u interleaves totals
            // correctly because a shorter head decides before the tail does.
            std::vector<ChainGraphSpec> bucket;
            std::vector<int> prefix;
            for (int nu = k; nu <= n - k; ++nu) {
                detail::for_each_composition(nu, k, prefix, [&](const std::vector<int>& u) {
                    std::vector<int> vprefix;
                    detail::for_each_composition(n - nu, k, vprefix,
                                                 [&](const std::vector<int>& v) {
                                                     bucket.push_back({k, u, v});
                                                 });
                });
            }
            std::sort(bucket.begin(), bucket.end(), [](const ChainGraphSpec& a, const ChainGraphSpec& b) {
                if (a.u_sizes != b.u_sizes)
                    return a.u_sizes < b.u_sizes;
                return a.v_sizes < b.v_sizes;
            });
            for (const auto& s : bucket)
                fn(s);
        }
    }
}

inline std::vector<ChainGraphSpec> enumerate_chain_specs(int max_n) {
    std::vector<ChainGraphSpec> out;
    for_each_chain_spec(max_n, [&](const ChainGraphSpec& s) { out.push_back(s); });
    return out;
}

} // namespace chaingraph
