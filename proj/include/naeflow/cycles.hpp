#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace naeflow {

struct CycleClassReport {
    bool has_bad_cycle = false;
    /// Vertex sequence of a simple cycle whose length is 2 mod 4.
    std::optional<std::vector<int>> witness;
    std::uint64_t cycles_enumerated = 0;
    /// True iff every simple cycle was visited (so a negative answer is final).
    bool exhausted = false;
};

inline constexpr std::uint64_t default_cycle_cap = 1'000'000;

namespace detail {

// Enumerates simple cycles through `root` in which every other vertex passes
// `allowed`. Each cycle is reported once (second vertex < last vertex).
// The reachability test keeps the search from walking into dead ends, so the
// work per reported cycle stays polynomial.
class cycle_walker {
public:
    cycle_walker(const Graph& g, CycleClassReport& rep, std::uint64_t cap) : g_(g), rep_(rep), cap_(cap)
    {
        on_path_.assign(static_cast<std::size_t>(g.order()), 0);
        mark_.assign(static_cast<std::size_t>(g.order()), 0);
    }

    // returns false when the search must stop (witness found or cap hit)
    template <class Allowed>
    bool run(int root, Allowed allowed)
    {
        path_.assign(1, root);
        on_path_[static_cast<std::size_t>(root)] = 1;
        bool go = extend(root, allowed);
        on_path_[static_cast<std::size_t>(root)] = 0;
        return go;
    }

private:
    template <class Allowed>
    bool can_return(int from, Allowed& allowed)
    {
        // BFS from `from` to a neighbor of root through free allowed vertices
        const int root = path_.front();
        ++stamp_;
        std::vector<int> q{from};
        mark_[static_cast<std::size_t>(from)] = stamp_;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (int u : g_.neighbors(v)) {
                if (u == root) {
                    // the edge back from path_[1] only closes a cycle of length >= 3
                    if (v != from || path_.size() >= 3)
                        return true;
                    continue;
                }
                if (on_path_[static_cast<std::size_t>(u)] || !allowed(u) ||
                    mark_[static_cast<std::size_t>(u)] == stamp_)
                    continue;
                mark_[static_cast<std::size_t>(u)] = stamp_;
                q.push_back(u);
            }
        }
        return false;
    }

    template <class Allowed>
    bool extend(int v, Allowed& allowed)
    {
        const int root = path_.front();
        for (int u : g_.neighbors(v)) {
            if (u == root) {
                if (path_.size() >= 3 && path_[1] < path_.back()) {
                    ++rep_.cycles_enumerated;
                    if (path_.size() % 4 == 2) {
                        rep_.has_bad_cycle = true;
                        rep_.witness = path_;
                        return false;
                    }
                    if (cap_ && rep_.cycles_enumerated >= cap_)
                        return false;
                }
                continue;
            }
            if (on_path_[static_cast<std::size_t>(u)] || !allowed(u))
                continue;
            path_.push_back(u);
            on_path_[static_cast<std::size_t>(u)] = 1;
            bool go = true;
            if (can_return(u, allowed))
                go = extend(u, allowed);
            on_path_[static_cast<std::size_t>(u)] = 0;
            path_.pop_back();
            if (!go)
                return false;
        }
        return true;
    }

    const Graph& g_;
    CycleClassReport& rep_;
    std::uint64_t cap_;
    std::vector<int> path_;
    std::vector<char> on_path_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

} // namespace detail

/// Searches for a simple cycle of length congruent to 2 mod 4 by explicit
/// enumeration of simple cycles, stopping at the first witness or after
/// `cycle_cap` cycles (0 = no cap).
inline CycleClassReport has_cycle_2_mod_4(const Graph& g, std::uint64_t cycle_cap = default_cycle_cap)
{
    CycleClassReport rep;
    detail::cycle_walker walker(g, rep, cycle_cap);
    for (int s = 0; s < g.order(); ++s) {
        if (!walker.run(s, [s](int u) { return u > s; }))
            return rep;
    }
    rep.exhausted = true;
    return rep;
}

/// Same search restricted to cycles through vertex v. Used for incremental
/// filtering when graphs grow one vertex at a time.
inline CycleClassReport has_cycle_2_mod_4_through(const Graph& g, int v, std::uint64_t cycle_cap = 0)
{
    CycleClassReport rep;
    detail::cycle_walker walker(g, rep, cycle_cap);
    rep.exhausted = walker.run(v, [](int) { return true; });
    if (rep.has_bad_cycle)
        rep.exhausted = false;
    return rep;
}

} // namespace naeflow
