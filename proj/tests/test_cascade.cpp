#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "rumor/cascade.hpp"
#include "rumor/errors.hpp"
#include "test_util.hpp"

using namespace rumor;

TEST_CASE("degenerate parameters") {
    const Graph g = testutil::path_graph(5);
    Rng rng(1);

    CascadeParams params{0.0, 3};
    auto snap = simulate(g, 2, params, rng);
    CHECK(snap.active().empty());
    CHECK(snap.informed() == std::vector<NodeId>{2});
    CHECK(snap.history.size() == 4);

    params = {0.5, 0};
    snap = simulate(g, 2, params, rng);
    CHECK(snap.active() == std::vector<NodeId>{2});

    CHECK_THROWS_AS(simulate(g, 9, params, rng), param_error);
    CHECK_THROWS_AS(simulate(g, 2, CascadeParams{1.5, 1}, rng), param_error);
    CHECK_THROWS_AS(simulate(g, 2, CascadeParams{0.5, -1}, rng), param_error);
}

TEST_CASE("deterministic spread at p = 1") {
    const Graph g = testutil::path_graph(5);
    Rng rng(1);
    const auto snap = simulate(g, 2, CascadeParams{1.0, 1}, rng);
    CHECK(snap.active() == std::vector<NodeId>{1, 3});
    CHECK(snap.informed() == std::vector<NodeId>{1, 2, 3});

    const auto snap2 = simulate(g, 2, CascadeParams{1.0, 2}, rng);
    CHECK(snap2.active() == std::vector<NodeId>{0, 4});
    // round 3: everyone informed, frontier empty
    const auto snap3 = simulate(g, 2, CascadeParams{1.0, 3}, rng);
    CHECK(snap3.active().empty());
}

TEST_CASE("star frontier size is binomial") {
    const Graph g = testutil::star_graph(4);
    Rng rng(99);
    const int N = 100'000;
    std::vector<int> counts(5, 0);
    for (int i = 0; i < N; ++i) {
        const auto snap = simulate(g, 0, CascadeParams{0.5, 1}, rng);
        ++counts[snap.active().size()];
    }
    const double pmf[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
    for (int k = 0; k <= 4; ++k) {
        const double sigma = std::sqrt(N * pmf[k] * (1 - pmf[k]));
        CHECK(std::abs(counts[k] - N * pmf[k]) <= 3.0 * sigma);
    }
}

TEST_CASE("frontier depth equals round index on trees") {
    // Random recursive tree: node i attaches to a uniform earlier node.
    Rng treeRng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const NodeId n = 200;
        Graph g(n);
        for (NodeId v = 1; v < n; ++v) {
            std::uniform_int_distribution<NodeId> pick(0, v - 1);
            g.add_edge(v, pick(treeRng));
        }
        g.finalize();

        Rng rng(500 + rep);
        const auto snap = simulate(g, 0, CascadeParams{0.7, 3}, rng);
        const auto dm = bfs_distances(g, {0}, kUnreachable);
        for (std::size_t r = 0; r < snap.history.size(); ++r)
            for (NodeId v : snap.history[r]) CHECK(dm.distance[v] == r);
    }
}

TEST_CASE("history invariants on random graphs") {
    for (int rep = 0; rep < 10; ++rep) {
        const Graph g = gen_erdos_renyi(400, 4.0, 300 + rep);
        Rng rng(42 + rep);
        const auto snap = simulate(g, static_cast<NodeId>(rep * 13 % 400),
                                   CascadeParams{0.6, 5}, rng);
        std::set<NodeId> seen;
        for (const auto& frontier : snap.history) {
            CHECK(std::is_sorted(frontier.begin(), frontier.end()));
            for (NodeId v : frontier) {
                CHECK(g.is_valid_node(v));
                CHECK(seen.insert(v).second); // frontiers are disjoint
            }
        }
        CHECK(seen.size() <= g.node_count());
        CHECK(snap.informed().size() == seen.size());
    }
}

TEST_CASE("bitwise replay with the same seed") {
    const Graph g = gen_erdos_renyi(500, 4.0, 77);
    Rng a(123), b(123);
    const auto s1 = simulate(g, 10, CascadeParams{0.4, 6}, a);
    const auto s2 = simulate(g, 10, CascadeParams{0.4, 6}, b);
    CHECK(s1.history == s2.history);
    CHECK(s1.to_json() == s2.to_json());
}

TEST_CASE("monotone coupling in p via keyed attempt deciders") {
    // Shared per-edge uniforms: the p = 0.6 informed set must contain the
    // p = 0.3 informed set when both runs read the same keyed draw.
    const Graph g = gen_erdos_renyi(300, 4.0, 55);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto decider = [&](double p) {
            return [seed, p](NodeId from, NodeId to) {
                return keyed_uniform(seed, from, to) < p;
            };
        };
        const auto lo = simulate_with(g, 5, CascadeParams{0.3, 5}, decider(0.3));
        const auto hi = simulate_with(g, 5, CascadeParams{0.6, 5}, decider(0.6));
        const auto lo_inf = lo.informed();
        const auto hi_inf = hi.informed();
        CHECK(std::includes(hi_inf.begin(), hi_inf.end(), lo_inf.begin(), lo_inf.end()));
    }
}

TEST_CASE("snapshot json shape") {
    const Graph g = testutil::path_graph(3);
    Rng rng(1);
    const auto snap = simulate(g, 1, CascadeParams{1.0, 1}, rng);
    const auto json = snap.to_json();
    CHECK(json.find("\"source\"") != std::string::npos);
    CHECK(json.find("\"history\"") != std::string::npos);
    CHECK(json.find("\"active\"") != std::string::npos);
}
