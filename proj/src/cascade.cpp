#include "rumor/cascade.hpp"

#include <algorithm>
#include <sstream>

#include "rumor/errors.hpp"

namespace rumor {

std::vector<NodeId> CascadeSnapshot::informed() const {
    std::vector<NodeId> out;
    for (const auto& frontier : history) out.insert(out.end(), frontier.begin(), frontier.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string CascadeSnapshot::to_json() const {
    std::ostringstream os;
    auto emit_list = [&os](const std::vector<NodeId>& ids) {
        os << '[';
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) os << ',';
            os << ids[i];
        }
        os << ']';
    };
    os << "{\"source\":" << source << ",\"rounds\":" << history.size() - 1 << ",\"active\":";
    emit_list(active());
    os << ",\"informed\":";
    emit_list(informed());
    os << ",\"history\":[";
    for (std::size_t r = 0; r < history.size(); ++r) {
        if (r) os << ',';
        emit_list(history[r]);
    }
    os << "]}";
    return os.str();
}

CascadeSnapshot simulate_with(const Graph& g, NodeId source, const CascadeParams& params,
                              const AttemptDecider& attempt) {
    if (!g.is_valid_node(source)) throw param_error("simulate: invalid source id");
    if (params.p < 0.0 || params.p > 1.0) throw param_error("simulate: p must be in [0,1]");
    if (params.rounds < 0) throw param_error("simulate: rounds must be >= 0");

    CascadeSnapshot snap;
    snap.source = source;
    snap.history.reserve(static_cast<std::size_t>(params.rounds) + 1);
    snap.history.push_back({source});

    std::vector<char> informed(g.node_count(), 0);
    informed[source] = 1;

    for (int round = 0; round < params.rounds; ++round) {
        const auto& frontier = snap.history.back();
        std::vector<NodeId> next;
        // "Uninformed" is fixed at the start of the round: nodes activated this
        // round may still receive attempts from every other active neighbor.
        for (NodeId u : frontier) {
            for (NodeId w : g.neighbors(u)) {
                if (informed[w]) continue;
                if (attempt(u, w)) next.push_back(w);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (NodeId w : next) informed[w] = 1;
        snap.history.push_back(std::move(next));
    }
    return snap;
}

CascadeSnapshot simulate(const Graph& g, NodeId source, const CascadeParams& params, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double p = params.p;
    return simulate_with(g, source, params,
                         [&](NodeId, NodeId) { return unif(rng) < p; });
}

} // namespace rumor
