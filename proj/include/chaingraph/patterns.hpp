#pragma once

#include "chaingraph/quadratic.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace chaingraph {

enum class SignLayout { Same, Flipped };

/// Periodic eigenvector pattern on a half graph H(k): the length-k vector x
/// is assigned to both color classes, as (x, x) or (x, -x) depending on the
/// sign layout.
struct PatternVector {
    std::vector<QuadraticNumber> entries;
    QuadraticNumber eigenvalue;
    SignLayout layout = SignLayout::Same;

    /// The full vector on the 2k vertices of H(k), in canonical order.
    std::vector<QuadraticNumber> half_graph_vector() const {
        std::vector<QuadraticNumber> x(entries.begin(), entries.end());
        for (const auto& e : entries)
            x.push_back(layout == SignLayout::Same ? e : -e);
        return x;
    }
};

struct PatternRefusal {
    std::string reason;
};

using PatternResult = std::variant<PatternVector, PatternRefusal>;

/// The period-6 cycle (1, 0, -1, -1, 0, 1); one full period sums to zero.
inline const std::array<QuadraticNumber, 6>& period6_entries() {
    static const std::array<QuadraticNumber, 6> a = {
        QuadraticNumber(1),  QuadraticNumber(0), QuadraticNumber(-1),
        QuadraticNumber(-1), QuadraticNumber(0), QuadraticNumber(1)};
    return a;
}

/// The period-10 cycle (w, -1, 0, 1, -w, -w, 1, 0, -1, w) with
/// w = (sqrt5 - 1)/2; one full period sums to zero.
inline const std::array<QuadraticNumber, 10>& period10_entries() {
    const QuadraticNumber w = QuadraticNumber::inverse_golden_ratio();
    static const std::array<QuadraticNumber, 10> b = {
        w,  QuadraticNumber(-1), QuadraticNumber(0),  QuadraticNumber(1), -w,
        -w, QuadraticNumber(1),  QuadraticNumber(0),  QuadraticNumber(-1), w};
    return b;
}

namespace detail {

/// Reduce i modulo `period` into {1, ..., period}.
inline int mod_into_period(int i, int period) {
    int r = i % period;
    if (r <= 0)
        r += period;
    return r;
}

template <size_t N>
std::vector<QuadraticNumber> cycle_entries(const std::array<QuadraticNumber, N>& cycle, int k) {
    std::vector<QuadraticNumber> x;
    x.reserve(k);
    for (int i = 1; i <= k; ++i)
        x.push_back(cycle[mod_into_period(i, static_cast<int>(N)) - 1]);
    return x;
}

} // namespace detail

/// Half-graph eigenvector from the period-6 pattern: eigenvalue 1 when
/// k = 1 (mod 6), eigenvalue -1 when k = 4 (mod 6), refusal otherwise.
inline PatternResult period6_vector(int k) {
    const int r = k % 6;
    if (r != 1 && r != 4)
        return PatternRefusal{"period-6 pattern needs k = 1 or 4 (mod 6); k = " +
                              std::to_string(k) + " has k mod 6 = " + std::to_string(r)};
    PatternVector p;
    p.entries = detail::cycle_entries(period6_entries(), k);
    p.eigenvalue = QuadraticNumber(r == 1 ? 1 : -1);
    p.layout = SignLayout::Same;
    return p;
}

/// Half-graph eigenvector from the period-10 pattern: eigenvalue w when
/// k = 7 (mod 10), eigenvalue -w when k = 2 (mod 10), refusal otherwise.
inline PatternResult period10_vector(int k) {
    const int r = k % 10;
    if (r != 7 && r != 2)
        return PatternRefusal{"period-10 pattern needs k = 7 or 2 (mod 10); k = " +
                              std::to_string(k) + " has k mod 10 = " + std::to_string(r)};
    const QuadraticNumber w = QuadraticNumber::inverse_golden_ratio();
    PatternVector p;
    p.entries = detail::cycle_entries(period10_entries(), k);
    p.eigenvalue = r == 7 ? w : -w;
    p.layout = SignLayout::Same;
    return p;
}

enum class PatternFamily { Period6, Period10 };

/// Recomputes the prefix-sum identities behind both pattern families in exact
/// arithmetic, with the upper index reduced modulo the period into
/// {1, ..., period} (an empty-sum reading would be wrong):
///   period 6:  sum_{i=1}^{5-s} a_i = -a_s    and  sum_{i=1}^{2-s} a_i = a_s
///   period 10: sum_{i=1}^{8-s} b_i = w * b_s and  sum_{i=1}^{3-s} b_i = -w * b_s
inline bool table_fixture_check(PatternFamily family) {
    const QuadraticNumber w = QuadraticNumber::inverse_golden_ratio();
    auto prefix_sum = [](const auto& cycle, int upto) {
        QuadraticNumber s(0);
        for (int i = 1; i <= upto; ++i)
            s += cycle[i - 1];
        return s;
    };
    if (family == PatternFamily::Period6) {
        const auto& a = period6_entries();
        for (int s = 1; s <= 6; ++s) {
            const QuadraticNumber lhs1 = prefix_sum(a, detail::mod_into_period(5 - s, 6));
            const QuadraticNumber lhs2 = prefix_sum(a, detail::mod_into_period(2 - s, 6));
            if (lhs1 != -a[s - 1] || lhs2 != a[s - 1])
                return false;
        }
        return true;
    }
    const auto& b = period10_entries();
    for (int s = 1; s <= 10; ++s) {
        const QuadraticNumber lhs1 = prefix_sum(b, detail::mod_into_period(8 - s, 10));
        const QuadraticNumber lhs2 = prefix_sum(b, detail::mod_into_period(3 - s, 10));
        if (lhs1 != w * b[s - 1] || lhs2 != -(w * b[s - 1]))
            return false;
    }
    return true;
}

/// Sign flip between the color classes: (x, x) for lambda becomes (x, -x) for
/// -lambda. Applied to an already-flipped pattern it negates the entries and
/// returns to the same-sign layout, i.e. twice gives -1 times the original.
inline PatternVector negate_classes(const PatternVector& p) {
    PatternVector out;
    out.eigenvalue = -p.eigenvalue;
    if (p.layout == SignLayout::Same) {
        out.entries = p.entries;
        out.layout = SignLayout::Flipped;
    } else {
        out.entries.reserve(p.entries.size());
        for (const auto& e : p.entries)
            out.entries.push_back(-e);
        out.layout = SignLayout::Same;
    }
    return out;
}

} // namespace chaingraph
