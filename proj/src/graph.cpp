#include "rumor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rumor/errors.hpp"

namespace rumor {

void Graph::add_edge(NodeId u, NodeId v) {
    if (u == v) return;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

void Graph::finalize() {
    edge_count_ = 0;
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        adj.shrink_to_fit();
        edge_count_ += adj.size();
    }
    edge_count_ /= 2;
}

Graph gen_erdos_renyi(NodeId n, double avg_degree, std::uint64_t seed) {
    if (n < 1) throw param_error("erdos_renyi: n must be >= 1");
    if (avg_degree < 0.0 || (n > 1 && avg_degree > static_cast<double>(n - 1)))
        throw param_error("erdos_renyi: avg_degree must be in [0, n-1]");

    Graph g(n);
    if (n > 1 && avg_degree > 0.0) {
        const double q = avg_degree / static_cast<double>(n - 1);
        Rng rng(seed);
        if (q >= 1.0) {
            for (NodeId u = 0; u < n; ++u)
                for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
        } else {
            // Geometric skipping over the linearized pair sequence.
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            const double log1q = std::log1p(-q);
            const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
            std::uint64_t idx = 0;
            while (true) {
                const double u01 = unif(rng);
                const std::uint64_t skip =
                    static_cast<std::uint64_t>(std::floor(std::log1p(-u01) / log1q));
                if (skip > total || idx + skip >= total) break;
                idx += skip;
                // Map idx -> pair (u, v), u < v, row-major over u.
                const double nn = static_cast<double>(n);
                double uf = std::floor(
                    nn - 0.5 - std::sqrt((nn - 0.5) * (nn - 0.5) - 2.0 * static_cast<double>(idx)));
                NodeId u = static_cast<NodeId>(uf);
                auto row_start = [&](NodeId r) {
                    return static_cast<std::uint64_t>(r) * (2 * n - r - 1) / 2;
                };
                while (u > 0 && row_start(u) > idx) --u;
                while (row_start(u + 1) <= idx) ++u;
                NodeId v = static_cast<NodeId>(u + 1 + (idx - row_start(u)));
                g.add_edge(u, v);
                ++idx;
            }
        }
    }
    g.finalize();
    return g;
}

Graph gen_config_regular(NodeId n, NodeId d, std::uint64_t seed) {
    if (n < 1) throw param_error("config_regular: n must be >= 1");
    if (d >= n) throw param_error("config_regular: d must be < n");
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
        throw param_error("config_regular: n*d must be even");

    std::vector<NodeId> half_edges;
    half_edges.reserve(static_cast<std::size_t>(n) * d);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId k = 0; k < d; ++k) half_edges.push_back(v);

    Rng rng(seed);
    std::shuffle(half_edges.begin(), half_edges.end(), rng);

    Graph g(n);
    for (std::size_t i = 0; i + 1 < half_edges.size(); i += 2)
        g.add_edge(half_edges[i], half_edges[i + 1]);
    g.finalize(); // erasure: self-loops dropped on insert, multi-edges deduplicated here
    return g;
}

Graph gen_geometric(NodeId n, double expected_degree, std::uint64_t seed) {
    if (n < 1) throw param_error("geometric: n must be >= 1");
    if (expected_degree < 0.0 || expected_degree >= static_cast<double>(n))
        throw param_error("geometric: expected_degree must be in [0, n)");

    Graph g(n);
    if (n > 1 && expected_degree > 0.0) {
        const double r =
            std::sqrt(expected_degree / (std::numbers::pi * static_cast<double>(n - 1)));
        if (r > 0.5) throw param_error("geometric: expected_degree too large (radius > 1/2)");

        Rng rng(seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> xs(n), ys(n);
        for (NodeId v = 0; v < n; ++v) {
            xs[v] = unif(rng);
            ys[v] = unif(rng);
        }

        // Grid buckets of side >= r; candidate neighbors live in the 3x3
        // surrounding block (with torus wrap-around).
        const int cells = std::max(1, static_cast<int>(std::floor(1.0 / r)));
        const double cell_size = 1.0 / cells;
        std::vector<std::vector<NodeId>> grid(static_cast<std::size_t>(cells) * cells);
        auto cell_of = [&](double x) {
            int c = static_cast<int>(x / cell_size);
            return std::min(c, cells - 1);
        };
        for (NodeId v = 0; v < n; ++v)
            grid[static_cast<std::size_t>(cell_of(xs[v])) * cells + cell_of(ys[v])].push_back(v);

        const double r2 = r * r;
        auto torus_d2 = [](double ax, double ay, double bx, double by) {
            double dx = std::fabs(ax - bx);
            double dy = std::fabs(ay - by);
            if (dx > 0.5) dx = 1.0 - dx;
            if (dy > 0.5) dy = 1.0 - dy;
            return dx * dx + dy * dy;
        };
        for (NodeId v = 0; v < n; ++v) {
            const int cx = cell_of(xs[v]);
            const int cy = cell_of(ys[v]);
            for (int dx = -1; dx <= 1; ++dx) {
                for (int dy = -1; dy <= 1; ++dy) {
                    const int gx = (cx + dx + cells) % cells;
                    const int gy = (cy + dy + cells) % cells;
                    for (NodeId w : grid[static_cast<std::size_t>(gx) * cells + gy]) {
                        if (w <= v) continue;
                        if (torus_d2(xs[v], ys[v], xs[w], ys[w]) <= r2) g.add_edge(v, w);
                    }
                }
            }
        }
    }
    g.finalize();
    return g;
}

Graph generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::ErdosRenyi:
            return gen_erdos_renyi(spec.n, spec.avg_degree, spec.seed);
        case GeneratorSpec::Kind::ConfigRegular:
            return gen_config_regular(spec.n, spec.d, spec.seed);
        case GeneratorSpec::Kind::Geometric:
            return gen_geometric(spec.n, spec.expected_degree, spec.seed);
    }
    throw param_error("generate: unknown generator kind");
}

DistanceMap bfs_distances(const Graph& g, const std::vector<NodeId>& sources, NodeId depth_cap) {
    if (sources.empty()) throw param_error("bfs_distances: source set must be nonempty");
    DistanceMap dm;
    dm.depth_cap = depth_cap;
    dm.distance.assign(g.node_count(), kUnreachable);

    std::deque<NodeId> queue;
    for (NodeId s : sources) {
        if (!g.is_valid_node(s)) throw param_error("bfs_distances: invalid source id");
        if (dm.distance[s] == kUnreachable) {
            dm.distance[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        const NodeId du = dm.distance[u];
        if (du >= depth_cap) continue;
        for (NodeId w : g.neighbors(u)) {
            if (dm.distance[w] == kUnreachable) {
                dm.distance[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dm;
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open edge list: " + path);
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw io_error("edge list header 'n m' missing: " + path);
    Graph g(static_cast<NodeId>(n));
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t u = 0, v = 0;
        if (!(in >> u >> v)) throw io_error("edge list truncated: " + path);
        if (u >= n || v >= n) throw io_error("edge list node id out of range: " + path);
        g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    g.finalize();
    return g;
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write edge list: " + path);
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

} // namespace rumor
