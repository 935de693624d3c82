#ifndef MTFR_SOLVERS_HPP
#define MTFR_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtfr/cascade.hpp"
#include "mtfr/cycles.hpp"
#include "mtfr/network.hpp"

namespace mtfr {

enum class SolveMethod {
    ExactBB,
    GreedyCycle,
    GreedyDegree,
    VertexCover,
    BidirEdgeAll,
    BruteForce,
};

const char* to_string(SolveMethod method);

struct SolveStats {
    size_t cycles_considered = 0;
    uint64_t branch_nodes = 0;
    double runtime_ms = 0.0;
};

/// Result of one solver run. Every solver re-checks its removal with the
/// cascade oracle before returning, so verified_total_failure is true on
/// every report. optimal is claimed only by the exact methods, and only
/// when they ran to completion within budget.
struct SolveReport {
    RemovalSet removal;
    size_t size = 0;
    SolveMethod method = SolveMethod::ExactBB;
    bool optimal = false;
    bool verified_total_failure = false;
    SolveStats stats;
};

struct Budget {
    uint64_t max_branch_nodes = 1'000'000;
    double max_seconds = 60.0;
};

/// Set of dependency pairs with no shared endpoints.
struct Matching {
    std::vector<Edge> pairs; // power-side id first, sorted
};

/// Minimum node set hitting every elementary cycle of the dependency
/// digraph (= Node-MTFR in star mode). Lazy constraint generation: solve a
/// minimum hitting set over a growing cycle subset by branch and bound; if
/// the candidate is not a total failure, pull a surviving cycle into the
/// subset and repeat. Ties break toward the smallest node id. On budget
/// exhaustion returns a greedily completed incumbent with optimal=false.
SolveReport exact_node_mtfr(const NetworkSpec& spec, const Budget& budget = {});

/// Arc version of exact_node_mtfr (= Edge-MTFR / feedback arc set on the
/// dependency digraph). Unidirectional star networks only.
SolveReport exact_edge_mtfr(const NetworkSpec& spec, const Budget& budget = {});

/// Independent oracle: enumerates removal sets by increasing cardinality
/// (lexicographic within each cardinality) and returns the first that
/// yields total failure. Guarded to networks with at most 24 relays.
SolveReport brute_force_mtfr(const NetworkSpec& spec, RemovalVariant variant);

/// One round of the classic greedy hitting-set rule: repeatedly take the
/// element in the most sets (ties toward the smallest id) until every set
/// is hit. Exposed for use on abstract set systems.
std::vector<std::string> greedy_hitting_set(const std::vector<std::vector<std::string>>& sets);

/// Cycle-based heuristic over a complete cycle set; throws TruncatedInput
/// if cs.truncated. The spec overload verifies the removal via the cascade
/// oracle; enumeration is done internally when only a cap is given.
SolveReport greedy_cycle_hitting(const NetworkSpec& spec, const CycleSet& cs);
SolveReport greedy_cycle_hitting(const NetworkSpec& spec, size_t cap = kDefaultCycleCap);

/// Degree-based heuristic: prune arcs on no cycle; remove the node of
/// maximum out-degree (ties toward smallest id); let the cascade delete the
/// consequent failures; repeat until the pruned digraph has no arcs.
SolveReport greedy_degree(const NetworkSpec& spec);

/// Maximum matching of the underlying bipartite simple graph. The digraph
/// must have its arcs in antiparallel pairs (bidirectional).
Matching max_matching(const DepDigraph& g);

/// Bidirectional Node-MTFR: minimum vertex cover obtained from a maximum
/// matching by the alternating-reachability construction; |cover| equals
/// the matching size.
SolveReport bidir_node_mtfr(const NetworkSpec& spec);

/// Bidirectional Edge-MTFR: every dependency pair is a 2-cycle and cycles
/// are stable components, so all pairs must go. size counts pairs.
SolveReport bidir_edge_mtfr(const NetworkSpec& spec);

} // namespace mtfr

#endif
