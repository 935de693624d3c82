#ifndef MTFR_CASCADE_HPP
#define MTFR_CASCADE_HPP

#include <set>
#include <string>
#include <vector>

#include "mtfr/network.hpp"

namespace mtfr {

enum class RemovalVariant { Node, Edge };

/// Initial removals: either RELAY node ids or dependency arcs. SOURCE nodes
/// cannot be removed. In bidirectional networks an edge removal is pairwise:
/// removing (a,b) also removes (b,a), so edge removals count dependency
/// pairs there.
struct RemovalSet {
    RemovalVariant variant = RemovalVariant::Node;
    std::set<std::string> nodes;
    std::vector<Edge> edges;

    static RemovalSet of_nodes(std::set<std::string> ids);
    static RemovalSet of_edges(std::vector<Edge> arcs);
    static RemovalSet none() { return of_nodes({}); }

    size_t size() const {
        return variant == RemovalVariant::Node ? nodes.size() : edges.size();
    }
};

/// Round-by-round record of a cascade. Round k holds the nodes failing in
/// the k-th synchronous round after the initial removal; rounds are pairwise
/// disjoint, disjoint from the initial removals, and together with the
/// surviving set they partition the RELAY nodes. An empty rounds list means
/// the initial removal caused no cascade at all.
struct CascadeTrace {
    RemovalSet initial;
    std::vector<std::set<std::string>> rounds;
    std::set<std::string> surviving;
};

struct Impact {
    double overall = 0.0;
    double power = 0.0;
    double comm = 0.0;
};

/// Indexed evaluator for one network. Construction is O(V+E); all query
/// methods are pure and safe to call concurrently. A RELAY operates iff it
/// (a) reaches a SOURCE of its own side through operating relays and
/// (b) has an incoming dependency arc from an operating node.
class CascadeEngine {
public:
    explicit CascadeEngine(const NetworkSpec& spec);

    std::set<std::string> operating_set(const RemovalSet& removals) const;
    CascadeTrace trace(const RemovalSet& removals) const;
    bool total_failure(const RemovalSet& removals) const;
    Impact impact(const RemovalSet& removals) const;

    // Index-level fast path for solvers that probe many removal sets.
    size_t node_count() const { return ids_.size(); }
    int node_index(const std::string& id) const;
    int arc_index(const std::string& from, const std::string& to) const;
    const std::vector<std::string>& ids() const { return ids_; }
    bool total_failure_nodes(const std::vector<int>& removed_relays) const;
    bool total_failure_arcs(const std::vector<int>& removed_arcs) const;
    std::vector<int> operating_nodes(const std::vector<int>& removed_relays,
                                     const std::vector<int>& removed_arcs) const;
    size_t arc_count() const { return arc_from_.size(); }

    /// Incremental evaluator for search loops that probe many nested removal
    /// sets: push applies one removal and cascades to the fixed point, pop
    /// undoes the last push. Not thread-safe; one walker per search.
    class Walker {
    public:
        explicit Walker(const CascadeEngine& engine);
        void push_node(int node);
        void push_arc(int arc);
        void pop();
        bool total_failure() const { return alive_relays_ == 0; }

    private:
        void kill(int node);
        void remove_arc(int arc);
        void settle(); // synchronous rounds after at least one death
        void check_head(int arc);

        const CascadeEngine& e_;
        std::vector<char> alive_;
        std::vector<char> arc_removed_;
        size_t alive_relays_ = 0;
        // undo log: node index for deaths, ~arc for arc removals
        std::vector<int> log_;
        std::vector<size_t> marks_;
        std::vector<char> reach_;
        std::vector<int> queue_;
        bool pending_death_ = false;
    };

private:
    void run(const std::vector<char>& node_removed,
             const std::vector<char>& arc_removed,
             std::vector<std::set<std::string>>* rounds,
             std::vector<char>& alive_out) const;
    void resolve(const RemovalSet& removals, std::vector<char>& node_removed,
                 std::vector<char>& arc_removed) const;

    std::vector<std::string> ids_;       // sorted node ids (sources + relays)
    std::vector<Side> side_;
    std::vector<Kind> kind_;
    std::vector<std::vector<int>> intra_adj_;
    std::vector<std::vector<int>> dep_in_;  // incoming dependency arcs, by arc index
    std::vector<int> arc_from_, arc_to_;    // arcs sorted as in the spec
    bool pairwise_edges_ = false;           // bidirectional: arcs removed per pair
    std::vector<int> reverse_arc_;          // arc index of (to,from), -1 if absent
    size_t relay_count_ = 0;
};

// Spec-level convenience wrappers; each builds a CascadeEngine internally.
std::set<std::string> operating_set(const NetworkSpec& spec, const RemovalSet& removals);
CascadeTrace cascade_trace(const NetworkSpec& spec, const RemovalSet& removals);
bool is_total_failure(const NetworkSpec& spec, const RemovalSet& removals);
Impact impact(const NetworkSpec& spec, const RemovalSet& removals);

} // namespace mtfr

#endif
