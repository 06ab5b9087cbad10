#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaingraph {

enum class VertexClass { U, V };

/// Vertex metadata: color class, 1-based cell number within the nested
/// partition (0 when unknown, e.g. for graphs read from edge lists), and
/// 1-based index within the cell.
struct VertexLabel {
    VertexClass cls = VertexClass::U;
    int cell = 0;
    int index = 1;

    bool operator==(const VertexLabel& o) const {
        return cls == o.cls && cell == o.cell && index == o.index;
    }
};

/// Cell partition (k, |U_1|..|U_k|, |V_1|..|V_k|) defining a chain graph:
/// every vertex of U_i is adjacent to exactly V_1 .. V_{k-i+1}.
struct ChainGraphSpec {
    int k = 0;
    std::vector<int> u_sizes;
    std::vector<int> v_sizes;

    int total() const {
        return std::accumulate(u_sizes.begin(), u_sizes.end(), 0) +
               std::accumulate(v_sizes.begin(), v_sizes.end(), 0);
    }

    void validate() const {
        if (k < 1)
            throw std::invalid_argument("chain spec: k must be >= 1");
        if (static_cast<int>(u_sizes.size()) != k)
            throw std::invalid_argument("chain spec: u_sizes must have k entries");
        if (static_cast<int>(v_sizes.size()) != k)
            throw std::invalid_argument("chain spec: v_sizes must have k entries");
        for (int s : u_sizes)
            if (s < 1)
                throw std::invalid_argument("chain spec: every U cell must be non-empty");
        for (int s : v_sizes)
            if (s < 1)
                throw std::invalid_argument("chain spec: every V cell must be non-empty");
    }

    static ChainGraphSpec half_graph(int k) {
        if (k < 1)
            throw std::invalid_argument("half graph: k must be >= 1");
        return {k, std::vector<int>(k, 1), std::vector<int>(k, 1)};
    }

    bool is_half_graph() const {
        auto all_one = [](const std::vector<int>& v) {
            return std::all_of(v.begin(), v.end(), [](int s) { return s == 1; });
        };
        return all_one(u_sizes) && all_one(v_sizes);
    }

    bool operator==(const ChainGraphSpec& o) const {
        return k == o.k && u_sizes == o.u_sizes && v_sizes == o.v_sizes;
    }
};

/// Simple undirected labeled graph, immutable after construction.
/// Vertex order convention: all U vertices first (by cell, then index),
/// then all V vertices (by cell, then index). Every spectrum/eigenvector
/// index in this library follows that order.
class Graph {
public:
    Graph(std::vector<VertexLabel> labels, const std::vector<std::pair<int, int>>& edges,
          std::optional<ChainGraphSpec> spec = std::nullopt)
        : labels_(std::move(labels)), adj_(labels_.size()), spec_(std::move(spec)) {
        const int n = static_cast<int>(labels_.size());
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::out_of_range("graph edge endpoint out of range");
            if (a == b)
                throw std::invalid_argument("graph: self-loops not allowed");
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("graph: duplicate edge");
        }
    }

    int n() const { return static_cast<int>(labels_.size()); }
    const VertexLabel& label(int v) const { return labels_.at(v); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::optional<ChainGraphSpec>& spec() const { return spec_; }

    bool has_edge(int a, int b) const {
        const auto& nb = adj_.at(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    long edge_count() const {
        long deg_sum = 0;
        for (const auto& nb : adj_)
            deg_sum += static_cast<long>(nb.size());
        return deg_sum / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n(); ++a)
            for (int b : adj_[a])
                if (a < b)
                    out.emplace_back(a, b);
        return out;
    }

    /// "u2" for the sole vertex of cell U_2, "u2.3" for the third vertex of a
    /// larger cell, "u5"/"v5" by raw id when the cell is unknown.
    std::string vertex_name(int v) const {
        const VertexLabel& l = label(v);
        std::string s(1, l.cls == VertexClass::U ? 'u' : 'v');
        if (l.cell == 0)
            return s + std::to_string(v);
        s += std::to_string(l.cell);
        bool shared_cell = false;
        for (int w = 0; w < n(); ++w)
            if (w != v && labels_[w].cls == l.cls && labels_[w].cell == l.cell)
                shared_cell = true;
        if (shared_cell)
            s += "." + std::to_string(l.index);
        return s;
    }

    int find_vertex(VertexClass cls, int cell, int index = 1) const {
        for (int v = 0; v < n(); ++v)
            if (labels_[v].cls == cls && labels_[v].cell == cell && labels_[v].index == index)
                return v;
        throw std::out_of_range("no vertex with requested label");
    }

    bool operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::vector<int>> adj_;
    std::optional<ChainGraphSpec> spec_;
};

/// Builds the chain graph of a spec: u in U_i is adjacent to all of
/// V_1 .. V_{k-i+1}. Vertices are emitted in the canonical order.
inline Graph build_chain_graph(const ChainGraphSpec& spec) {
    spec.validate();
    std::vector<VertexLabel> labels;
    std::vector<int> u_cell_start(spec.k), v_cell_start(spec.k);
    for (int c = 0; c < spec.k; ++c) {
        u_cell_start[c] = static_cast<int>(labels.size());
        for (int i = 1; i <= spec.u_sizes[c]; ++i)
            labels.push_back({VertexClass::U, c + 1, i});
    }
    for (int c = 0; c < spec.k; ++c) {
        v_cell_start[c] = static_cast<int>(labels.size());
        for (int i = 1; i <= spec.v_sizes[c]; ++i)
            labels.push_back({VertexClass::V, c + 1, i});
    }
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < spec.k; ++c) {
        const int reach = spec.k - c;          // U_{c+1} sees V_1 .. V_{reach}
        for (int i = 0; i < spec.u_sizes[c]; ++i) {
            const int u = u_cell_start[c] + i;
            for (int d = 0; d < reach; ++d)
                for (int j = 0; j < spec.v_sizes[d]; ++j)
                    edges.emplace_back(u, v_cell_start[d] + j);
        }
    }
    return Graph(std::move(labels), edges, spec);
}

inline Graph half_graph(int k) {
    return build_chain_graph(ChainGraphSpec::half_graph(k));
}

/// Chain-graph recognition for arbitrary simple graphs: bipartite (checked by
/// 2-coloring) and neighborhoods within each color class nested under
/// inclusion, which is equivalent to having no induced 2K_2.
inline bool is_chain_graph(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false; // odd cycle
                }
            }
        }
    }
    // Within each class, sort by degree descending and check that each
    // neighborhood contains the next. Isolated vertices nest trivially.
    for (int side = 0; side < 2; ++side) {
        std::vector<int> cls;
        for (int v = 0; v < n; ++v)
            if (color[v] == side)
                cls.push_back(v);
        std::sort(cls.begin(), cls.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b))
                return g.degree(a) > g.degree(b);
            return a < b;
        });
        for (size_t i = 0; i + 1 < cls.size(); ++i) {
            const auto& big = g.neighbors(cls[i]);
            const auto& small = g.neighbors(cls[i + 1]);
            if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
                return false;
        }
    }
    return true;
}

/// Induced subgraph on V(G) minus one vertex; remaining vertices keep their
/// labels and relative order. The originating chain spec does not survive a
/// deletion, so the result carries none.
inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw std::out_of_range("delete_vertex: vertex id out of range");
    std::vector<VertexLabel> labels;
    std::vector<int> remap(g.n(), -1);
    for (int w = 0; w < g.n(); ++w) {
        if (w == v)
            continue;
        remap[w] = static_cast<int>(labels.size());
        labels.push_back(g.label(w));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v)
            edges.emplace_back(remap[a], remap[b]);
    return Graph(std::move(labels), edges);
}

/// Adds a vertex with the same neighborhood as v (not adjacent to v itself),
/// inserted directly behind v's cell so the canonical order is preserved.
/// For chain-built graphs this increments v's cell size in the carried spec.
inline Graph add_duplicate(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw std::out_of_range("add_duplicate: vertex id out of range");
    const VertexLabel vl = g.label(v);
    // Insert after the last vertex sharing v's class and cell.
    int pos = v + 1;
    while (pos < g.n() && g.label(pos).cls == vl.cls && g.label(pos).cell == vl.cell)
        ++pos;
    int max_index = 0;
    for (int w = 0; w < g.n(); ++w)
        if (g.label(w).cls == vl.cls && g.label(w).cell == vl.cell)
            max_index = std::max(max_index, g.label(w).index);

    std::vector<VertexLabel> labels;
    std::vector<int> remap(g.n(), -1);
    for (int w = 0; w < g.n(); ++w) {
        if (w == pos)
            labels.push_back({vl.cls, vl.cell, max_index + 1});
        remap[w] = static_cast<int>(labels.size());
        labels.push_back(g.label(w));
    }
    if (pos == g.n())
        labels.push_back({vl.cls, vl.cell, max_index + 1});
    const int dup = pos;

    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        edges.emplace_back(remap[a], remap[b]);
    for (int w : g.neighbors(v))
        edges.emplace_back(dup, remap[w]);

    std::optional<ChainGraphSpec> spec;
    if (g.spec() && vl.cell >= 1) {
        spec = *g.spec();
        auto& sizes = vl.cls == VertexClass::U ? spec->u_sizes : spec->v_sizes;
        sizes[vl.cell - 1] += 1;
    }
    return Graph(std::move(labels), edges, spec);
}

} // namespace chaingraph
