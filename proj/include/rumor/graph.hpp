#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rumor/rng.hpp"

namespace rumor {

using NodeId = std::uint32_t;

inline constexpr NodeId kUnreachable = std::numeric_limits<NodeId>::max();

// Static undirected simple graph with contiguous node ids 0..n-1.
// Adjacency lists are sorted ascending after finalize(); the structure is
// immutable afterwards and safe to share read-only across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId node_count) : adjacency_(node_count) {}

    NodeId node_count() const { return static_cast<NodeId>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_[v]; }
    NodeId degree(NodeId v) const { return static_cast<NodeId>(adjacency_[v].size()); }

    // Records both directions; self-loops are ignored, duplicates removed by finalize().
    void add_edge(NodeId u, NodeId v);

    // Sorts adjacency lists, removes parallel edges, recounts edges.
    void finalize();

    bool is_valid_node(NodeId v) const { return v < node_count(); }

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct GeneratorSpec {
    enum class Kind { ErdosRenyi, ConfigRegular, Geometric };
    Kind kind = Kind::ErdosRenyi;
    NodeId n = 1;
    double avg_degree = 0.0;   // ErdosRenyi
    NodeId d = 0;              // ConfigRegular
    double expected_degree = 0.0; // Geometric (2-dim unit torus)
    std::uint64_t seed = 0;
};

// G(n, q) with q = avg_degree/(n-1), so the expected degree is avg_degree exactly.
Graph gen_erdos_renyi(NodeId n, double avg_degree, std::uint64_t seed);

// Erased configuration model: pair n*d half-edges uniformly, then drop
// self-loops and parallel edges.
Graph gen_config_regular(NodeId n, NodeId d, std::uint64_t seed);

// n uniform points on the 2-dim unit torus, edge iff torus distance <= r with
// r = sqrt(expected_degree / (pi * (n-1))).
Graph gen_geometric(NodeId n, double expected_degree, std::uint64_t seed);

Graph generate(const GeneratorSpec& spec);

struct DistanceMap {
    std::vector<NodeId> distance; // kUnreachable beyond the cap
    NodeId depth_cap = kUnreachable;

    bool reachable(NodeId v) const { return distance[v] != kUnreachable; }
};

// Multi-source BFS truncated at depth_cap; exact hop distance to the nearest source.
DistanceMap bfs_distances(const Graph& g, const std::vector<NodeId>& sources, NodeId depth_cap);

// Edge-list file format: header "n m", then m lines "u v".
Graph read_edge_list(const std::string& path);
void write_edge_list(const Graph& g, const std::string& path);

} // namespace rumor
