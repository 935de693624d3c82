#include "mtfr/cascade.hpp"

#include <algorithm>
#include <deque>

namespace mtfr {

RemovalSet RemovalSet::of_nodes(std::set<std::string> ids) {
    RemovalSet r;
    r.variant = RemovalVariant::Node;
    r.nodes = std::move(ids);
    return r;
}

RemovalSet RemovalSet::of_edges(std::vector<Edge> arcs) {
    RemovalSet r;
    r.variant = RemovalVariant::Edge;
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    r.edges = std::move(arcs);
    return r;
}

CascadeEngine::CascadeEngine(const NetworkSpec& spec) {
    for (const auto& n : spec.nodes) ids_.push_back(n.id);
    const size_t n = ids_.size();
    side_.resize(n);
    kind_.resize(n);
    intra_adj_.assign(n, {});
    dep_in_.assign(n, {});
    pairwise_edges_ = spec.mode == Mode::Bidirectional;

    auto index_of = [&](const std::string& id) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        return static_cast<int>(it - ids_.begin());
    };

    for (size_t i = 0; i < n; ++i) {
        const NodeRef& node = spec.nodes[i];
        side_[i] = node.side;
        kind_[i] = node.kind;
        if (node.kind == Kind::Relay) ++relay_count_;
    }
    for (const auto& [a, b] : spec.intra_edges) {
        int ia = index_of(a), ib = index_of(b);
        intra_adj_[ia].push_back(ib);
        intra_adj_[ib].push_back(ia);
    }
    for (const auto& [a, b] : spec.dep_edges) {
        int ia = index_of(a), ib = index_of(b);
        arc_from_.push_back(ia);
        arc_to_.push_back(ib);
        dep_in_[ib].push_back(static_cast<int>(arc_from_.size()) - 1);
    }
    reverse_arc_.assign(arc_from_.size(), -1);
    for (size_t k = 0; k < arc_from_.size(); ++k) {
        const Edge rev{ids_[arc_to_[k]], ids_[arc_from_[k]]};
        auto it = std::lower_bound(spec.dep_edges.begin(), spec.dep_edges.end(), rev);
        if (it != spec.dep_edges.end() && *it == rev)
            reverse_arc_[k] = static_cast<int>(it - spec.dep_edges.begin());
    }
}

int CascadeEngine::node_index(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int CascadeEngine::arc_index(const std::string& from, const std::string& to) const {
    int a = node_index(from), b = node_index(to);
    if (a < 0 || b < 0) return -1;
    for (int k : dep_in_[b])
        if (arc_from_[k] == a) return k;
    return -1;
}

void CascadeEngine::resolve(const RemovalSet& removals,
                            std::vector<char>& node_removed,
                            std::vector<char>& arc_removed) const {
    node_removed.assign(ids_.size(), 0);
    arc_removed.assign(arc_from_.size(), 0);
    if (removals.variant == RemovalVariant::Node) {
        for (const auto& id : removals.nodes) {
            int i = node_index(id);
            if (i < 0)
                throw Error(ErrorCode::InvalidRemoval, "unknown node " + id);
            if (kind_[i] != Kind::Relay)
                throw Error(ErrorCode::InvalidRemoval, "SOURCE node " + id + " cannot be removed");
            node_removed[i] = 1;
        }
    } else {
        for (const auto& [a, b] : removals.edges) {
            int k = arc_index(a, b);
            if (k < 0)
                throw Error(ErrorCode::InvalidRemoval, "unknown dependency arc " + a + ">" + b);
            arc_removed[k] = 1;
            if (pairwise_edges_ && reverse_arc_[k] >= 0)
                arc_removed[reverse_arc_[k]] = 1;
        }
    }
}

void CascadeEngine::run(const std::vector<char>& node_removed,
                        const std::vector<char>& arc_removed,
                        std::vector<std::set<std::string>>* rounds,
                        std::vector<char>& alive) const {
    const size_t n = ids_.size();
    alive.assign(n, 1);
    for (size_t i = 0; i < n; ++i)
        if (node_removed[i]) alive[i] = 0;

    std::vector<char> reach(n);
    std::deque<int> queue;
    std::vector<int> failing;
    for (;;) {
        // (a) side-source reachability through operating relays
        std::fill(reach.begin(), reach.end(), 0);
        queue.clear();
        for (size_t i = 0; i < n; ++i) {
            if (kind_[i] == Kind::Source) {
                reach[i] = 1;
                queue.push_back(static_cast<int>(i));
            }
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : intra_adj_[v]) {
                if (reach[w] || !alive[w]) continue;
                reach[w] = 1;
                queue.push_back(w);
            }
        }

        failing.clear();
        for (size_t i = 0; i < n; ++i) {
            if (!alive[i] || kind_[i] != Kind::Relay) continue;
            bool supported = false;
            for (int k : dep_in_[i]) {
                if (!arc_removed[k] && alive[arc_from_[k]]) {
                    supported = true;
                    break;
                }
            }
            if (!reach[i] || !supported) failing.push_back(static_cast<int>(i));
        }
        if (failing.empty()) break;
        if (rounds) {
            std::set<std::string> round;
            for (int v : failing) round.insert(ids_[v]);
            rounds->push_back(std::move(round));
        }
        for (int v : failing) alive[v] = 0;
    }
}

std::set<std::string> CascadeEngine::operating_set(const RemovalSet& removals) const {
    std::vector<char> node_removed, arc_removed, alive;
    resolve(removals, node_removed, arc_removed);
    run(node_removed, arc_removed, nullptr, alive);
    std::set<std::string> out;
    for (size_t i = 0; i < ids_.size(); ++i)
        if (alive[i] && kind_[i] == Kind::Relay) out.insert(ids_[i]);
    return out;
}

CascadeTrace CascadeEngine::trace(const RemovalSet& removals) const {
    std::vector<char> node_removed, arc_removed, alive;
    resolve(removals, node_removed, arc_removed);
    CascadeTrace t;
    t.initial = removals;
    run(node_removed, arc_removed, &t.rounds, alive);
    for (size_t i = 0; i < ids_.size(); ++i)
        if (alive[i] && kind_[i] == Kind::Relay) t.surviving.insert(ids_[i]);
    return t;
}

bool CascadeEngine::total_failure(const RemovalSet& removals) const {
    std::vector<char> node_removed, arc_removed, alive;
    resolve(removals, node_removed, arc_removed);
    run(node_removed, arc_removed, nullptr, alive);
    for (size_t i = 0; i < ids_.size(); ++i)
        if (alive[i] && kind_[i] == Kind::Relay) return false;
    return true;
}

Impact CascadeEngine::impact(const RemovalSet& removals) const {
    std::vector<char> node_removed, arc_removed, alive;
    resolve(removals, node_removed, arc_removed);
    run(node_removed, arc_removed, nullptr, alive);
    size_t relays = 0, failed = 0;
    size_t relays_by_side[2] = {0, 0}, failed_by_side[2] = {0, 0};
    for (size_t i = 0; i < ids_.size(); ++i) {
        if (kind_[i] != Kind::Relay) continue;
        const int s = side_[i] == Side::Power ? 0 : 1;
        ++relays;
        ++relays_by_side[s];
        if (!alive[i]) {
            ++failed;
            ++failed_by_side[s];
        }
    }
    // An empty side has vacuously failed in full; keeps impact == 1 exactly
    // when no relay operates.
    auto frac = [](size_t num, size_t den) {
        return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    Impact im;
    im.overall = frac(failed, relays);
    im.power = frac(failed_by_side[0], relays_by_side[0]);
    im.comm = frac(failed_by_side[1], relays_by_side[1]);
    return im;
}

bool CascadeEngine::total_failure_nodes(const std::vector<int>& removed_relays) const {
    std::vector<char> node_removed(ids_.size(), 0), arc_removed(arc_from_.size(), 0), alive;
    for (int i : removed_relays) node_removed[i] = 1;
    run(node_removed, arc_removed, nullptr, alive);
    for (size_t i = 0; i < ids_.size(); ++i)
        if (alive[i] && kind_[i] == Kind::Relay) return false;
    return true;
}

bool CascadeEngine::total_failure_arcs(const std::vector<int>& removed_arcs) const {
    std::vector<char> node_removed(ids_.size(), 0), arc_removed(arc_from_.size(), 0), alive;
    for (int k : removed_arcs) {
        arc_removed[k] = 1;
        if (pairwise_edges_ && reverse_arc_[k] >= 0) arc_removed[reverse_arc_[k]] = 1;
    }
    run(node_removed, arc_removed, nullptr, alive);
    for (size_t i = 0; i < ids_.size(); ++i)
        if (alive[i] && kind_[i] == Kind::Relay) return false;
    return true;
}

std::vector<int> CascadeEngine::operating_nodes(const std::vector<int>& removed_relays,
                                                const std::vector<int>& removed_arcs) const {
    std::vector<char> node_removed(ids_.size(), 0), arc_removed(arc_from_.size(), 0), alive;
    for (int i : removed_relays) node_removed[i] = 1;
    for (int k : removed_arcs) {
        arc_removed[k] = 1;
        if (pairwise_edges_ && reverse_arc_[k] >= 0) arc_removed[reverse_arc_[k]] = 1;
    }
    run(node_removed, arc_removed, nullptr, alive);
    std::vector<int> out;
    for (size_t i = 0; i < ids_.size(); ++i)
        if (alive[i] && kind_[i] == Kind::Relay) out.push_back(static_cast<int>(i));
    return out;
}

std::set<std::string> operating_set(const NetworkSpec& spec, const RemovalSet& removals) {
    return CascadeEngine(spec).operating_set(removals);
}

CascadeTrace cascade_trace(const NetworkSpec& spec, const RemovalSet& removals) {
    return CascadeEngine(spec).trace(removals);
}

bool is_total_failure(const NetworkSpec& spec, const RemovalSet& removals) {
    return CascadeEngine(spec).total_failure(removals);
}

Impact impact(const NetworkSpec& spec, const RemovalSet& removals) {
    return CascadeEngine(spec).impact(removals);
}

} // namespace mtfr
