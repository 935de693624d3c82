#include "mtfr/randgen.hpp"

#include <algorithm>
#include <set>

#include "mtfr/rng.hpp"

namespace mtfr {

NetworkSpec gen_cycle_sampled(const GenConfig& cfg,
                              std::vector<std::vector<std::string>>* sampled_cycles) {
    if (cfg.n_per_side < 1)
        throw Error(ErrorCode::Invariant, "n_per_side must be >= 1");
    if (cfg.max_cycle_len < 2 || cfg.max_cycle_len % 2 != 0)
        throw Error(ErrorCode::Invariant, "max_cycle_len must be even and >= 2");

    const size_t n = cfg.n_per_side;
    std::vector<std::string> subs, routers;
    for (size_t i = 1; i <= n; ++i) {
        subs.push_back("S" + std::to_string(i));
        routers.push_back("R" + std::to_string(i));
    }

    std::vector<NodeRef> nodes;
    nodes.push_back({"G", Side::Power, Kind::Source});
    nodes.push_back({"C", Side::Comm, Kind::Source});
    std::vector<Edge> intra;
    for (size_t i = 0; i < n; ++i) {
        nodes.push_back({subs[i], Side::Power, Kind::Relay});
        nodes.push_back({routers[i], Side::Comm, Kind::Relay});
        intra.emplace_back("G", subs[i]);
        intra.emplace_back("C", routers[i]);
    }

    Rng rng(cfg.seed);
    // A cycle alternates sides, so at most 2n nodes fit in it.
    const size_t max_len = std::min(cfg.max_cycle_len, 2 * n);
    const size_t length_choices = max_len / 2;

    std::set<Edge> arcs;
    std::set<std::string> with_in_arc;
    while (with_in_arc.size() < 2 * n) {
        const size_t half = 1 + rng.index(length_choices); // L = 2*half
        std::vector<size_t> s_pick = rng.sample(half, n);
        std::vector<size_t> r_pick = rng.sample(half, n);
        std::vector<std::string> cycle;
        cycle.reserve(2 * half);
        for (size_t i = 0; i < half; ++i) {
            cycle.push_back(subs[s_pick[i]]);
            cycle.push_back(routers[r_pick[i]]);
        }
        for (size_t i = 0; i < cycle.size(); ++i) {
            const std::string& from = cycle[i];
            const std::string& to = cycle[(i + 1) % cycle.size()];
            arcs.emplace(from, to);
            with_in_arc.insert(to);
        }
        if (sampled_cycles) sampled_cycles->push_back(std::move(cycle));
    }

    return NetworkSpec::from_parts(Mode::Unidirectional, std::move(nodes), std::move(intra),
                                   {arcs.begin(), arcs.end()});
}

NetworkSpec to_bidirectional(const NetworkSpec& spec) {
    return NetworkSpec::from_parts(Mode::Bidirectional, spec.nodes, spec.intra_edges,
                                   spec.dep_edges);
}

} // namespace mtfr
