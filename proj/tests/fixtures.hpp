#ifndef MTFR_TESTS_FIXTURES_HPP
#define MTFR_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "mtfr/network.hpp"

namespace fixtures {

using mtfr::Edge;
using mtfr::Kind;
using mtfr::Mode;
using mtfr::NetworkSpec;
using mtfr::NodeRef;
using mtfr::Side;

// Two stars (generator G, control center C) with the given relay counts and
// dependency arcs.
inline NetworkSpec star(size_t substations, size_t routers, std::vector<Edge> dep,
                        Mode mode = Mode::Unidirectional) {
    std::vector<NodeRef> nodes{{"G", Side::Power, Kind::Source},
                               {"C", Side::Comm, Kind::Source}};
    std::vector<Edge> intra;
    for (size_t i = 1; i <= substations; ++i) {
        const std::string id = "S" + std::to_string(i);
        nodes.push_back({id, Side::Power, Kind::Relay});
        intra.emplace_back("G", id);
    }
    for (size_t i = 1; i <= routers; ++i) {
        const std::string id = "R" + std::to_string(i);
        nodes.push_back({id, Side::Comm, Kind::Relay});
        intra.emplace_back("C", id);
    }
    return NetworkSpec::from_parts(mode, std::move(nodes), std::move(intra), std::move(dep));
}

// Single-failure cascade fixture: meshed (non-star) sides whose removal of
// S4 fails R3, then {S1, S3, R2}, then {R1, S2}.
inline NetworkSpec cascade_example() {
    std::vector<NodeRef> nodes{
        {"G", Side::Power, Kind::Source},  {"C", Side::Comm, Kind::Source},
        {"S1", Side::Power, Kind::Relay}, {"S2", Side::Power, Kind::Relay},
        {"S3", Side::Power, Kind::Relay}, {"S4", Side::Power, Kind::Relay},
        {"R1", Side::Comm, Kind::Relay},  {"R2", Side::Comm, Kind::Relay},
        {"R3", Side::Comm, Kind::Relay}};
    std::vector<Edge> intra{{"G", "S1"}, {"G", "S3"}, {"G", "S4"}, {"S1", "S2"}, {"S2", "S3"},
                            {"C", "R1"}, {"C", "R3"}, {"R3", "R2"}};
    std::vector<Edge> dep{{"S4", "R3"}, {"S1", "R1"}, {"S2", "R2"}, {"R3", "S1"},
                          {"R3", "S3"}, {"R1", "S2"}, {"R2", "S4"}};
    return NetworkSpec::from_parts(Mode::Unidirectional, std::move(nodes), std::move(intra),
                                   std::move(dep));
}

// The same power grid with the control dependency neutralized: one stub
// router R0 powered by every substation and controlling every substation, so
// only source connectivity matters.
inline NetworkSpec cascade_example_power_only() {
    std::vector<NodeRef> nodes{
        {"G", Side::Power, Kind::Source},  {"C", Side::Comm, Kind::Source},
        {"S1", Side::Power, Kind::Relay}, {"S2", Side::Power, Kind::Relay},
        {"S3", Side::Power, Kind::Relay}, {"S4", Side::Power, Kind::Relay},
        {"R0", Side::Comm, Kind::Relay}};
    std::vector<Edge> intra{{"G", "S1"}, {"G", "S3"}, {"G", "S4"}, {"S1", "S2"},
                            {"S2", "S3"}, {"C", "R0"}};
    std::vector<Edge> dep;
    for (const std::string s : {"S1", "S2", "S3", "S4"}) {
        dep.emplace_back(s, "R0");
        dep.emplace_back("R0", s);
    }
    return NetworkSpec::from_parts(Mode::Unidirectional, std::move(nodes), std::move(intra),
                                   std::move(dep));
}

// Star networks whose dependency digraph is one directed 6-cycle
// S1 -> R1 -> S2 -> R2 -> S3 -> R3 -> S1.
inline NetworkSpec six_cycle() {
    return star(3, 3,
                {{"S1", "R1"}, {"R1", "S2"}, {"S2", "R2"}, {"R2", "S3"}, {"S3", "R3"},
                 {"R3", "S1"}});
}

// 6-cycle over {S1,R1,S3,R2,S4,R3} plus an extra substation S2 reached by
// R3 but with no path back.
inline NetworkSpec six_cycle_with_dead_end() {
    return star(4, 3,
                {{"S1", "R1"}, {"R1", "S3"}, {"S3", "R2"}, {"R2", "S4"}, {"S4", "R3"},
                 {"R3", "S1"}, {"R3", "S2"}});
}

// Complete bipartite 2x2 bidirectional dependencies.
inline NetworkSpec k22_bidir() {
    return star(2, 2, {{"S1", "R1"}, {"S1", "R2"}, {"S2", "R1"}, {"S2", "R2"}},
                Mode::Bidirectional);
}

// Two node-disjoint directed 2-cycles, unidirectional mode.
inline NetworkSpec two_disjoint_two_cycles() {
    return star(2, 2, {{"S1", "R1"}, {"R1", "S1"}, {"S2", "R2"}, {"R2", "S2"}});
}

inline NetworkSpec single_pair_bidir() {
    return star(1, 1, {{"S1", "R1"}}, Mode::Bidirectional);
}

inline const char* minimal_doc = R"({
  "mode": "bidirectional",
  "nodes": [
    {"id": "G", "side": "power", "kind": "source"},
    {"id": "S1", "side": "power", "kind": "relay"},
    {"id": "C", "side": "comm", "kind": "source"},
    {"id": "R1", "side": "comm", "kind": "relay"}
  ],
  "intra_edges": [["G", "S1"], ["C", "R1"]],
  "dep_edges": [["S1", "R1"], ["R1", "S1"]]
})";

} // namespace fixtures

#endif
