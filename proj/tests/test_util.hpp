#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "rumor/graph.hpp"

namespace testutil {

inline rumor::Graph path_graph(rumor::NodeId n) {
    rumor::Graph g(n);
    for (rumor::NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.finalize();
    return g;
}

inline rumor::Graph cycle_graph(rumor::NodeId n) {
    rumor::Graph g(n);
    for (rumor::NodeId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    g.finalize();
    return g;
}

// Node 0 is the hub.
inline rumor::Graph star_graph(rumor::NodeId leaves) {
    rumor::Graph g(leaves + 1);
    for (rumor::NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
    g.finalize();
    return g;
}

// Independent oracle for bfs_distances: Dijkstra with unit edge weights,
// no truncation.
inline std::vector<std::uint64_t> dijkstra_unit(const rumor::Graph& g,
                                                const std::vector<rumor::NodeId>& sources) {
    constexpr std::uint64_t inf = ~0ULL;
    std::vector<std::uint64_t> dist(g.node_count(), inf);
    using Item = std::pair<std::uint64_t, rumor::NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (auto s : sources) {
        dist[s] = 0;
        heap.push({0, s});
    }
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v]) continue;
        for (auto w : g.neighbors(v)) {
            if (d + 1 < dist[w]) {
                dist[w] = d + 1;
                heap.push({d + 1, w});
            }
        }
    }
    return dist;
}

} // namespace testutil
