#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace naeflow {

/// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    int other(int w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in canonical order (sorted by (min, max)); an edge id is its
/// position in that order, and every labeling/coloring in the library is
/// aligned to it. Loops and duplicate edges are rejected at construction.
/// Values are immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), inc_(static_cast<std::size_t>(n))
    {
        if (n < 0)
            throw precondition_error("negative vertex count");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<std::string> names = {})
        : Graph(n)
    {
        edges_.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw precondition_error("edge endpoint out of range: " + std::to_string(a) + " " +
                                         std::to_string(b));
            if (a == b)
                throw precondition_error("self-loop at vertex " + std::to_string(a));
            edges_.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw precondition_error("duplicate edge");
        for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
            const Edge& e = edges_[static_cast<std::size_t>(id)];
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            inc_[static_cast<std::size_t>(e.u)].push_back(id);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
            inc_[static_cast<std::size_t>(e.v)].push_back(id);
        }
        // neighbors sorted ascending, incident ids permuted alongside
        for (int v = 0; v < n_; ++v) {
            auto& nb = adj_[static_cast<std::size_t>(v)];
            auto& ic = inc_[static_cast<std::size_t>(v)];
            std::vector<std::pair<int, int>> tmp;
            tmp.reserve(nb.size());
            for (std::size_t i = 0; i < nb.size(); ++i)
                tmp.emplace_back(nb[i], ic[i]);
            std::sort(tmp.begin(), tmp.end());
            for (std::size_t i = 0; i < tmp.size(); ++i) {
                nb[i] = tmp[i].first;
                ic[i] = tmp[i].second;
            }
        }
        if (!names.empty()) {
            if (static_cast<int>(names.size()) != n)
                throw precondition_error("names must have one entry per vertex");
            names_ = std::move(names);
        }
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

    std::span<const int> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    /// Edge ids incident with v, aligned with neighbors(v).
    std::span<const int> incident_edges(int v) const { return inc_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

    std::optional<int> edge_id(int a, int b) const
    {
        Edge key{std::min(a, b), std::max(a, b)};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key)
            return std::nullopt;
        return static_cast<int>(it - edges_.begin());
    }

    bool adjacent(int a, int b) const { return edge_id(a, b).has_value(); }

    const std::vector<std::string>& names() const { return names_; }

    std::vector<std::pair<int, int>> edge_pairs() const
    {
        std::vector<std::pair<int, int>> out;
        out.reserve(edges_.size());
        for (const Edge& e : edges_)
            out.emplace_back(e.u, e.v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::string> names_;
};

/// Graph with an integer weight per vertex; weights may be zero or negative.
struct VertexWeightedGraph {
    Graph graph;
    std::vector<std::int64_t> weights;

    VertexWeightedGraph() = default;
    VertexWeightedGraph(Graph g, std::vector<std::int64_t> w) : graph(std::move(g)), weights(std::move(w))
    {
        if (static_cast<int>(weights.size()) != graph.order())
            throw precondition_error("weight vector length must equal vertex count");
    }
};

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

/// BFS 2-coloring; every component's smallest vertex goes left.
inline std::optional<Bipartition> is_bipartite(const Graph& g)
{
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                auto& su = side[static_cast<std::size_t>(u)];
                if (su == -1) {
                    su = 1 - side[static_cast<std::size_t>(v)];
                    q.push(u);
                } else if (su == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition p;
    for (int v = 0; v < n; ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? p.left : p.right).push_back(v);
    return p;
}

/// Vertex sequence of an odd cycle, or nullopt when the graph is bipartite.
/// Found from the first BFS edge joining two vertices on the same side.
inline std::optional<std::vector<int>> odd_cycle(const Graph& g)
{
    const int n = g.order();
    std::vector<int> depth(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (depth[static_cast<std::size_t>(s)] != -1)
            continue;
        depth[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (depth[static_cast<std::size_t>(u)] == -1) {
                    depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(u)] = v;
                    q.push(u);
                } else if (depth[static_cast<std::size_t>(u)] == depth[static_cast<std::size_t>(v)]) {
                    // climb both tree paths to the common ancestor
                    std::vector<int> left{v}, right{u};
                    while (left.back() != right.back()) {
                        left.push_back(parent[static_cast<std::size_t>(left.back())]);
                        right.push_back(parent[static_cast<std::size_t>(right.back())]);
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    return left;
                }
            }
        }
    }
    return std::nullopt;
}

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> regular;     ///< r when every degree equals r
    std::optional<int> semiregular; ///< d when every degree lies in {d, d+1}
};

inline DegreeProfile degree_profile(const Graph& g)
{
    if (g.order() == 0)
        throw precondition_error("degree profile of the empty graph");
    DegreeProfile p;
    p.min_degree = g.degree(0);
    p.max_degree = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        p.min_degree = std::min(p.min_degree, g.degree(v));
        p.max_degree = std::max(p.max_degree, g.degree(v));
    }
    if (p.min_degree == p.max_degree)
        p.regular = p.min_degree;
    if (p.max_degree - p.min_degree <= 1)
        p.semiregular = p.min_degree;
    return p;
}

/// Components sorted by smallest contained vertex; vertices ascending inside.
inline std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(u)] == -1) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const Graph& g)
{
    return g.order() <= 1 || connected_components(g).size() == 1;
}

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices)
{
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges()) {
        int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0)
            es.emplace_back(a, b);
    }
    return Graph(static_cast<int>(vertices.size()), es);
}

/// Graph with the listed edge ids removed (same vertex set).
inline Graph remove_edges(const Graph& g, std::span<const int> edge_ids)
{
    std::vector<char> drop(static_cast<std::size_t>(g.size()), 0);
    for (int id : edge_ids)
        drop.at(static_cast<std::size_t>(id)) = 1;
    std::vector<std::pair<int, int>> es;
    for (int id = 0; id < g.size(); ++id)
        if (!drop[static_cast<std::size_t>(id)])
            es.emplace_back(g.edge(id).u, g.edge(id).v);
    return Graph(g.order(), es);
}

/// Closed trail through every edge exactly once (Hierholzer), starting and
/// ending at `start`. Always continues along the lowest-id unused edge.
inline std::vector<int> euler_tour(const Graph& g, int start)
{
    if (start < 0 || start >= g.order())
        throw precondition_error("start vertex out of range");
    if (g.degree(start) == 0)
        throw precondition_error("start vertex is isolated");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2 != 0)
            throw precondition_error("vertex " + std::to_string(v) + " has odd degree");
    auto comps = connected_components(g);
    int nontrivial = 0;
    for (const auto& c : comps)
        if (c.size() > 1)
            ++nontrivial;
    if (nontrivial > 1)
        throw precondition_error("edges span more than one component");

    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::pair<int, int>> stack{{start, -1}}; // (vertex, edge used to arrive)
    std::vector<int> circuit;
    circuit.reserve(static_cast<std::size_t>(g.size()));
    while (!stack.empty()) {
        auto [v, via] = stack.back();
        auto inc = g.incident_edges(v);
        auto& cur = cursor[static_cast<std::size_t>(v)];
        while (cur < inc.size() && used[static_cast<std::size_t>(inc[cur])])
            ++cur;
        if (cur == inc.size()) {
            if (via >= 0)
                circuit.push_back(via);
            stack.pop_back();
        } else {
            int id = inc[cur];
            used[static_cast<std::size_t>(id)] = 1;
            stack.emplace_back(g.edge(id).other(v), id);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

} // namespace naeflow
