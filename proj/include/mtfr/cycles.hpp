#ifndef MTFR_CYCLES_HPP
#define MTFR_CYCLES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mtfr/network.hpp"

namespace mtfr {

inline constexpr size_t kDefaultCycleCap = 1'000'000;

/// Elementary directed cycles of a dependency digraph. Each cycle is the
/// ordered node sequence starting at its smallest id (the closing arc back
/// to the first node is implicit). On bipartite digraphs every cycle
/// alternates sides and has even length. truncated means enumeration hit
/// the cap and cycles holds only the first cap cycles; solvers must not
/// claim exactness from a truncated set.
struct CycleSet {
    std::vector<std::vector<std::string>> cycles;
    std::map<std::string, std::vector<size_t>> node_incidence;
    bool truncated = false;
};

/// Strongly connected components, ordered by smallest contained id and
/// sorted inside each component.
std::vector<std::vector<std::string>> sccs(const DepDigraph& g);

/// Drops every arc whose endpoints lie in different SCCs (exactly the arcs
/// on no directed cycle). Node set is unchanged; idempotent.
DepDigraph prune_acyclic_arcs(const DepDigraph& g);

/// Blocked elementary-circuit search (Johnson), least start node first,
/// neighbors in ascending id order. Deterministic.
CycleSet enumerate_cycles(const DepDigraph& g, size_t cap = kDefaultCycleCap);

} // namespace mtfr

#endif
