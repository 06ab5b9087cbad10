#pragma once

#include "chaingraph/downer.hpp"
#include "chaingraph/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace chaingraph {

using nlohmann::json;

/// Malformed input (graph document, spec, lambda syntax). The message names
/// the offending field; the CLI maps this to exit status 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Exact values: a Rational serializes as [num, den]; integers ride as JSON
// numbers while they fit in 64 bits and as decimal strings beyond that, so
// re-parsing is always the identity.

inline json bigint_to_json(const BigInt& x) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi)
        return x.convert_to<std::int64_t>();
    return x.str();
}

inline BigInt bigint_from_json(const json& j, const char* field) {
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(std::string("invalid integer in field '") + field + "'");
        }
    }
    throw ParseError(std::string("field '") + field + "' must be an integer or integer string");
}

inline json rational_to_json(const Rational& r) {
    return json::array({bigint_to_json(r.num()), bigint_to_json(r.den())});
}

inline Rational rational_from_json(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string("field '") + field + "' must be a [num, den] pair");
    return Rational(bigint_from_json(j[0], field), bigint_from_json(j[1], field));
}

/// {"a":[num,den],"b":[num,den]} meaning a + b*sqrt5.
inline json quadratic_to_json(const QuadraticNumber& q) {
    return json{{"a", rational_to_json(q.rational_part())},
                {"b", rational_to_json(q.root5_part())}};
}

inline QuadraticNumber quadratic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw ParseError("exact value must be an object with fields 'a' and 'b'");
    return {rational_from_json(j.at("a"), "a"), rational_from_json(j.at("b"), "b")};
}

inline json lambda_to_json(const Lambda& l) {
    if (l.exact)
        return json{{"exact", quadratic_to_json(*l.exact)}, {"value", l.value}};
    return json{{"value", l.value}};
}

// ---------------------------------------------------------------------------
// Graph documents. Two shapes, one JSON document per graph:
//   {"type":"chain-spec","k":K,"u_sizes":[...],"v_sizes":[...]}
//   {"type":"edge-list","n":N,"u_class":[ids],"edges":[[i,j],...]}
// IDs are 0-based in the canonical vertex order.

inline json spec_to_json(const ChainGraphSpec& spec) {
    return json{{"type", "chain-spec"},
                {"k", spec.k},
                {"u_sizes", spec.u_sizes},
                {"v_sizes", spec.v_sizes}};
}

inline json graph_to_json(const Graph& g) {
    if (g.spec())
        return spec_to_json(*g.spec());
    json edges = json::array();
    for (auto [a, b] : g.edges())
        edges.push_back(json::array({a, b}));
    json u_class = json::array();
    for (int v = 0; v < g.n(); ++v)
        if (g.label(v).cls == VertexClass::U)
            u_class.push_back(v);
    return json{{"type", "edge-list"}, {"n", g.n()}, {"u_class", u_class}, {"edges", edges}};
}

inline ChainGraphSpec spec_from_json(const json& j) {
    ChainGraphSpec spec;
    if (!j.contains("k") || !j.at("k").is_number_integer())
        throw ParseError("chain-spec: field 'k' must be an integer");
    spec.k = j.at("k").get<int>();
    if (spec.k < 1)
        throw ParseError("chain-spec: k must be >= 1");
    auto read_sizes = [&](const char* field) {
        if (!j.contains(field) || !j.at(field).is_array())
            throw ParseError(std::string("chain-spec: field '") + field + "' must be an array");
        std::vector<int> sizes;
        for (const auto& e : j.at(field)) {
            if (!e.is_number_integer() || e.get<int>() < 1)
                throw ParseError(std::string("chain-spec: entries of '") + field +
                                 "' must be positive integers");
            sizes.push_back(e.get<int>());
        }
        return sizes;
    };
    spec.u_sizes = read_sizes("u_sizes");
    spec.v_sizes = read_sizes("v_sizes");
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return spec;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw ParseError("graph document: field 'type' must be a string");
    const std::string type = j.at("type").get<std::string>();
    if (type == "chain-spec")
        return build_chain_graph(spec_from_json(j));
    if (type != "edge-list")
        throw ParseError("graph document: field 'type' must be 'chain-spec' or 'edge-list'");

    if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<int>() < 1)
        throw ParseError("edge-list: field 'n' must be a positive integer");
    const int n = j.at("n").get<int>();

    std::vector<bool> in_u(n, false);
    if (!j.contains("u_class") || !j.at("u_class").is_array())
        throw ParseError("edge-list: field 'u_class' must be an array of vertex ids");
    for (const auto& e : j.at("u_class")) {
        if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() >= n)
            throw ParseError("edge-list: 'u_class' ids must lie in [0, n)");
        in_u[e.get<int>()] = true;
    }
    std::vector<VertexLabel> labels(n);
    for (int v = 0; v < n; ++v)
        labels[v] = {in_u[v] ? VertexClass::U : VertexClass::V, 0, 1};

    if (!j.contains("edges") || !j.at("edges").is_array())
        throw ParseError("edge-list: field 'edges' must be an array of [i, j] pairs");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edge-list: field 'edges' must contain [i, j] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(std::move(labels), edges);
    } catch (const std::exception& e) {
        throw ParseError(std::string("edge-list: ") + e.what());
    }
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("graph file '" + path + "' is not valid JSON: " + e.what());
    }
    return graph_from_json(j);
}

// ---------------------------------------------------------------------------
// Lambda syntax: integers, p/q rationals and plain decimals parse exactly;
// `w` / `-w` mean +-(sqrt5-1)/2; anything else falls back to a float-only
// value if strtod accepts it.

inline Lambda parse_lambda(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("lambda: empty value");

    const QuadraticNumber w = QuadraticNumber::inverse_golden_ratio();
    if (s == "w" || s == "+w")
        return Lambda::from_exact(w);
    if (s == "-w")
        return Lambda::from_exact(-w);

    auto all_digits = [](const std::string& t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
    };
    std::string body = s;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body = body.substr(1);
    }

    auto finish = [&](Rational r) {
        if (negative)
            r = -r;
        return Lambda::from_exact(QuadraticNumber(std::move(r)));
    };

    if (all_digits(body))
        return finish(Rational(BigInt(body)));

    const auto slash = body.find('/');
    if (slash != std::string::npos) {
        const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("lambda: malformed rational '" + text + "'");
        if (BigInt(den) == 0)
            throw ParseError("lambda: zero denominator in '" + text + "'");
        return finish(Rational(BigInt(num), BigInt(den)));
    }

    const auto dot = body.find('.');
    if (dot != std::string::npos) {
        const std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
        if ((whole.empty() || all_digits(whole)) && all_digits(frac)) {
            BigInt scale = 1;
            for (size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
            const BigInt digits = BigInt(whole.empty() ? "0" : whole) * scale + BigInt(frac);
            return finish(Rational(digits, scale));
        }
    }

    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0')
        throw ParseError("lambda: cannot parse '" + text + "'");
    return Lambda::from_double(d);
}

} // namespace chaingraph
