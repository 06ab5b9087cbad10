#include "chaingraph/enumerate.hpp"
#include "chaingraph/graph.hpp"

#include <catch2/catch.hpp>

#include <set>

using namespace chaingraph;

namespace {

Graph path_graph(int n) {
    std::vector<VertexLabel> labels(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i)
        labels[i] = {i % 2 == 0 ? VertexClass::U : VertexClass::V, 0, 1};
    return Graph(std::move(labels), edges);
}

} // namespace

TEST_CASE("chain graph construction") {
    SECTION("K2 from the smallest spec") {
        const Graph g = build_chain_graph({1, {1}, {1}});
        CHECK(g.n() == 2);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(0, 1));
    }

    SECTION("H(2) is the path u2-v1-u1-v2") {
        const Graph g = half_graph(2);
        REQUIRE(g.n() == 4);
        CHECK(g.edge_count() == 3);
        CHECK(g.has_edge(0, 2)); // u1-v1
        CHECK(g.has_edge(0, 3)); // u1-v2
        CHECK(g.has_edge(1, 2)); // u2-v1
        CHECK_FALSE(g.has_edge(1, 3));
    }

    SECTION("degrees of k=2, u=[1,2], v=[2,1]") {
        const Graph g = build_chain_graph({2, {1, 2}, {2, 1}});
        REQUIRE(g.n() == 6);
        const int expected[] = {3, 2, 2, 3, 3, 1};
        for (int v = 0; v < 6; ++v)
            CHECK(g.degree(v) == expected[v]);
        CHECK(is_chain_graph(g));
    }

    SECTION("invalid specs are rejected") {
        CHECK_THROWS_AS(build_chain_graph({0, {}, {}}), std::invalid_argument);
        CHECK_THROWS_AS(build_chain_graph({2, {1, 0}, {1, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(build_chain_graph({2, {1}, {1, 1}}), std::invalid_argument);
    }

    SECTION("half graph sizes") {
        CHECK(half_graph(1).edge_count() == 1);
        const Graph h7 = half_graph(7);
        CHECK(h7.n() == 14);
        CHECK(h7.edge_count() == 28); // 7+6+...+1
    }

    SECTION("vertex naming follows cells") {
        const Graph h2 = half_graph(2);
        CHECK(h2.vertex_name(0) == "u1");
        CHECK(h2.vertex_name(3) == "v2");
        const Graph wide = build_chain_graph({1, {2}, {1}});
        CHECK(wide.vertex_name(0) == "u1.1");
        CHECK(wide.vertex_name(1) == "u1.2");
        CHECK(wide.vertex_name(2) == "v1");
    }
}

TEST_CASE("chain graph recognition") {
    SECTION("C4 is a chain graph") {
        CHECK(is_chain_graph(build_chain_graph({1, {2}, {2}})));
    }
    SECTION("P5 is not") {
        CHECK_FALSE(is_chain_graph(path_graph(5)));
    }
    SECTION("2K2 is not") {
        std::vector<VertexLabel> labels(4, {VertexClass::U, 0, 1});
        Graph two_k2(std::move(labels), {{0, 1}, {2, 3}});
        CHECK_FALSE(is_chain_graph(two_k2));
    }
    SECTION("odd cycles are not") {
        std::vector<VertexLabel> labels(3, {VertexClass::U, 0, 1});
        Graph triangle(std::move(labels), {{0, 1}, {1, 2}, {0, 2}});
        CHECK_FALSE(is_chain_graph(triangle));
    }
    SECTION("isolated vertices are fine") {
        std::vector<VertexLabel> labels(3, {VertexClass::U, 0, 1});
        Graph edge_plus_isolated(std::move(labels), {{0, 1}});
        CHECK(is_chain_graph(edge_plus_isolated));
    }
}

TEST_CASE("vertex deletion") {
    SECTION("K2 minus an endpoint") {
        const Graph g = delete_vertex(build_chain_graph({1, {1}, {1}}), 0);
        CHECK(g.n() == 1);
        CHECK(g.edge_count() == 0);
    }

    SECTION("H(2) minus u2 is the star v2-u1-v1") {
        const Graph g = delete_vertex(half_graph(2), 1);
        REQUIRE(g.n() == 3);
        CHECK(g.degree(0) == 2); // u1 keeps both neighbors
        CHECK(g.label(0).cls == VertexClass::U);
        CHECK(g.label(1).cls == VertexClass::V);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(0, 2));
    }

    SECTION("H(7) minus u2 loses deg(u2) = 6 edges") {
        const Graph g = delete_vertex(half_graph(7), 1);
        CHECK(g.n() == 13);
        CHECK(g.edge_count() == 22);
    }

    SECTION("out of range id") {
        CHECK_THROWS_AS(delete_vertex(half_graph(2), 4), std::out_of_range);
        CHECK_THROWS_AS(delete_vertex(half_graph(2), -1), std::out_of_range);
    }

    SECTION("deleting from a chain graph keeps it a chain graph") {
        for_each_chain_spec(8, [&](const ChainGraphSpec& spec) {
            const Graph g = build_chain_graph(spec);
            for (int v = 0; v < g.n(); ++v)
                REQUIRE(is_chain_graph(delete_vertex(g, v)));
        });
    }
}

TEST_CASE("duplicate vertices") {
    SECTION("K2 plus a duplicate endpoint is P3") {
        const Graph g = add_duplicate(build_chain_graph({1, {1}, {1}}), 0);
        REQUIRE(g.n() == 3);
        CHECK(g.edge_count() == 2);
        // Both U vertices see the single V vertex and not each other.
        CHECK(g.degree(2) == 2);
        CHECK_FALSE(g.has_edge(0, 1));
    }

    SECTION("duplicating a U vertex of C4 gives K(3,2)") {
        const Graph c4 = build_chain_graph({1, {2}, {2}});
        const Graph g = add_duplicate(c4, 0);
        const Graph expected = build_chain_graph({1, {3}, {2}});
        CHECK(g == expected);
        REQUIRE(g.spec().has_value());
        CHECK(g.spec()->u_sizes == std::vector<int>{3});
    }

    SECTION("duplicate then delete restores the original") {
        const Graph h3 = half_graph(3);
        for (int v = 0; v < h3.n(); ++v) {
            const Graph bigger = add_duplicate(h3, v);
            // The duplicate sits right after v's cell block.
            int dup = -1;
            for (int w = 0; w < bigger.n(); ++w)
                if (bigger.label(w).cls == h3.label(v).cls &&
                    bigger.label(w).cell == h3.label(v).cell && bigger.label(w).index == 2)
                    dup = w;
            REQUIRE(dup >= 0);
            CHECK(delete_vertex(bigger, dup) == h3);
        }
    }

    SECTION("new vertex shares the neighborhood") {
        const Graph h4 = half_graph(4);
        for (int v = 0; v < h4.n(); ++v) {
            const Graph g = add_duplicate(h4, v);
            // Find the two vertices of the doubled cell and compare sorted
            // neighborhoods.
            std::vector<int> cell_members;
            for (int w = 0; w < g.n(); ++w)
                if (g.label(w).cls == h4.label(v).cls && g.label(w).cell == h4.label(v).cell)
                    cell_members.push_back(w);
            REQUIRE(cell_members.size() == 2);
            CHECK(g.neighbors(cell_members[0]) == g.neighbors(cell_members[1]));
            CHECK_FALSE(g.has_edge(cell_members[0], cell_members[1]));
        }
    }

    SECTION("out of range id") {
        CHECK_THROWS_AS(add_duplicate(half_graph(2), 7), std::out_of_range);
    }
}

TEST_CASE("spec enumeration") {
    SECTION("only K2 fits in two vertices") {
        const auto specs = enumerate_chain_specs(2);
        REQUIRE(specs.size() == 1);
        CHECK(specs[0] == ChainGraphSpec{1, {1}, {1}});
    }

    SECTION("exactly four specs on four vertices") {
        int count = 0;
        for_each_chain_spec(4, [&](const ChainGraphSpec& s) {
            if (s.total() == 4)
                ++count;
        });
        CHECK(count == 4);
    }

    SECTION("deterministic order: totals, then k, then lexicographic") {
        const auto specs = enumerate_chain_specs(4);
        const std::vector<ChainGraphSpec> expected = {
            {1, {1}, {1}},
            {1, {1}, {2}}, {1, {2}, {1}},
            {1, {1}, {3}}, {1, {2}, {2}}, {1, {3}, {1}}, {2, {1, 1}, {1, 1}},
        };
        REQUIRE(specs.size() == expected.size());
        for (size_t i = 0; i < specs.size(); ++i)
            CHECK(specs[i] == expected[i]);
    }

    SECTION("no duplicates, all valid, all build to chain graphs") {
        std::set<std::string> seen;
        for_each_chain_spec(12, [&](const ChainGraphSpec& spec) {
            REQUIRE_NOTHROW(spec.validate());
            std::string key = std::to_string(spec.k);
            for (int s : spec.u_sizes)
                key += "u" + std::to_string(s);
            for (int s : spec.v_sizes)
                key += "v" + std::to_string(s);
            REQUIRE(seen.insert(key).second);
            REQUIRE(is_chain_graph(build_chain_graph(spec)));
        });
        CHECK(seen.size() == 2047); // 1 + 2 + 4 + ... + 1024
    }

    SECTION("nested neighborhoods, the defining structure") {
        for_each_chain_spec(8, [&](const ChainGraphSpec& spec) {
            const Graph g = build_chain_graph(spec);
            // Walking U cells in order, neighborhoods shrink by inclusion.
            for (int v = 0; v + 1 < g.n(); ++v) {
                const auto &a = g.label(v), &b = g.label(v + 1);
                if (a.cls != b.cls)
                    continue;
                const auto &na = g.neighbors(v), &nb = g.neighbors(v + 1);
                REQUIRE(std::includes(na.begin(), na.end(), nb.begin(), nb.end()));
            }
        });
    }

    SECTION("k=1 specs are complete bipartite") {
        const Graph g = build_chain_graph({1, {3}, {4}});
        CHECK(g.edge_count() == 12);
    }
}
