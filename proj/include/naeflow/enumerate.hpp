#pragma once

#include <cstdint>
#include <functional>

#include "graph.hpp"

namespace naeflow {

/// Options passed through to nauty's geng. Graphs come out one per
/// isomorphism class.
struct EnumerateOptions {
    int n = 0;               ///< 1..16
    bool connected = false;
    bool bipartite = false;
    int min_degree = -1;     ///< -1: no bound
    int max_degree = -1;
    int max_edges = -1;      ///< -1: no bound
    /// Called on every intermediate graph; returning true discards it and all
    /// its extensions, so the property must be hereditary for induced subgraphs.
    std::function<bool(const Graph&)> prune;
};

inline constexpr int max_enumeration_order = 16;

/// Calls visit on each generated graph and returns the number of graphs.
/// Serialized internally (geng keeps global state).
std::uint64_t enumerate_graphs(const EnumerateOptions& opt, const std::function<void(const Graph&)>& visit);

} // namespace naeflow
