#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/graph/properties.hpp>

#include "graph.hpp"

namespace naeflow {

/// Cyclic order of incident edge ids around each vertex.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarityResult {
    bool planar = false;
    std::optional<RotationSystem> embedding;
};

namespace detail {

using boost_planar_graph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

inline boost_planar_graph to_boost(const Graph& g)
{
    boost_planar_graph bg(static_cast<std::size_t>(g.order()));
    for (int id = 0; id < g.size(); ++id)
        boost::add_edge(static_cast<std::size_t>(g.edge(id).u), static_cast<std::size_t>(g.edge(id).v), id, bg);
    return bg;
}

} // namespace detail

/// Exact planarity test (Boyer-Myrvold edge addition). When `want_embedding`
/// is set and the graph is planar, also returns a rotation system realizing a
/// planar embedding.
inline PlanarityResult planarity(const Graph& g, bool want_embedding = false)
{
    PlanarityResult res;
    // cheap rejection by the Euler bound
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6)
        return res;
    auto bg = detail::to_boost(g);
    using edge_t = boost::graph_traits<detail::boost_planar_graph>::edge_descriptor;
    if (!want_embedding) {
        res.planar = boost::boyer_myrvold_planarity_test(bg);
        return res;
    }
    std::vector<std::vector<edge_t>> emb(static_cast<std::size_t>(g.order()));
    auto emb_map = boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg));
    res.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = emb_map);
    if (res.planar) {
        RotationSystem rot(static_cast<std::size_t>(g.order()));
        auto eidx = boost::get(boost::edge_index, bg);
        for (int v = 0; v < g.order(); ++v)
            for (const edge_t& e : emb[static_cast<std::size_t>(v)])
                rot[static_cast<std::size_t>(v)].push_back(eidx[e]);
        res.embedding = std::move(rot);
    }
    return res;
}

inline bool is_planar(const Graph& g) { return planarity(g).planar; }

/// Edge ids of a subdivision of K5 or K3,3 contained in g, or nullopt when g
/// is planar.
inline std::optional<std::vector<int>> kuratowski_edges(const Graph& g)
{
    auto bg = detail::to_boost(g);
    using edge_t = boost::graph_traits<detail::boost_planar_graph>::edge_descriptor;
    std::vector<edge_t> found;
    if (boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                            boost::boyer_myrvold_params::kuratowski_subgraph =
                                                std::back_inserter(found)))
        return std::nullopt;
    auto eidx = boost::get(boost::edge_index, bg);
    std::vector<int> ids;
    for (const edge_t& e : found)
        ids.push_back(eidx[e]);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    // boost's subgraph can carry extra edges; a minimal nonplanar edge set is a subdivision
    for (std::size_t i = 0; i < ids.size();) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t j = 0; j < ids.size(); ++j)
            if (j != i)
                es.emplace_back(g.edge(ids[j]).u, g.edge(ids[j]).v);
        if (!is_planar(Graph(g.order(), es)))
            ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return ids;
}

/// Number of faces traced by a rotation system, each component traced on its
/// own sphere. A rotation system is planar iff n - m + f = 2 per component.
inline int count_faces(const Graph& g, const RotationSystem& rot)
{
    // darts: (edge id, direction); direction 0 means u->v
    const int m = g.size();
    if (static_cast<int>(rot.size()) != g.order())
        throw precondition_error("rotation system size mismatch");
    // position of each edge in the rotation at each endpoint
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        const auto& r = rot[static_cast<std::size_t>(v)];
        if (static_cast<int>(r.size()) != g.degree(v))
            throw precondition_error("rotation at vertex " + std::to_string(v) + " has wrong length");
        pos[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(m), -1);
        for (std::size_t i = 0; i < r.size(); ++i)
            pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(r[i])] = static_cast<int>(i);
    }
    std::vector<char> seen(static_cast<std::size_t>(2 * m), 0);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[static_cast<std::size_t>(d0)])
            continue;
        ++faces;
        int d = d0;
        while (!seen[static_cast<std::size_t>(d)]) {
            seen[static_cast<std::size_t>(d)] = 1;
            const Edge& e = g.edge(d / 2);
            int head = (d % 2 == 0) ? e.v : e.u;
            const auto& r = rot[static_cast<std::size_t>(head)];
            int i = pos[static_cast<std::size_t>(head)][static_cast<std::size_t>(d / 2)];
            int next = r[(static_cast<std::size_t>(i) + 1) % r.size()];
            const Edge& ne = g.edge(next);
            d = 2 * next + (ne.u == head ? 0 : 1);
        }
    }
    return faces;
}

inline bool is_planar_rotation_system(const Graph& g, const RotationSystem& rot)
{
    int nontrivial_vertices = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0)
            ++nontrivial_vertices;
    if (g.size() == 0)
        return true;
    int nontrivial_comps = 0;
    for (const auto& c : connected_components(g))
        if (c.size() > 1)
            ++nontrivial_comps;
    return nontrivial_vertices - g.size() + count_faces(g, rot) == 2 * nontrivial_comps;
}

} // namespace naeflow
