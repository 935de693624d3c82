#include "mtfr/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "digraph_index.hpp"

namespace mtfr {

const char* to_string(SolveMethod method) {
    switch (method) {
    case SolveMethod::ExactBB: return "EXACT_BB";
    case SolveMethod::GreedyCycle: return "GREEDY_CYCLE";
    case SolveMethod::GreedyDegree: return "GREEDY_DEGREE";
    case SolveMethod::VertexCover: return "VERTEX_COVER";
    case SolveMethod::BidirEdgeAll: return "BIDIR_EDGE_ALL";
    case SolveMethod::BruteForce: return "BRUTE_FORCE";
    }
    return "UNKNOWN";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_star(const NetworkSpec& spec) {
    if (!is_star_mode(spec))
        throw Error(ErrorCode::NotStar, "network is not in star mode");
}

void verify_report(const CascadeEngine& engine, SolveReport& report) {
    if (!engine.total_failure(report.removal))
        throw std::logic_error("solver produced a removal that is not a total failure");
    report.verified_total_failure = true;
}

// ---------------------------------------------------------------------------
// Minimum hitting set by branch and bound over integer element ids.
// ---------------------------------------------------------------------------

// Greedy max-incidence hitting set; ties toward the smallest element.
std::vector<int> greedy_hit(const std::vector<std::vector<int>>& sets, int universe) {
    std::vector<char> covered(sets.size(), 0);
    std::vector<int> count(universe, 0);
    size_t remaining = sets.size();
    for (const auto& s : sets)
        for (int e : s) ++count[e];
    std::vector<int> picked;
    while (remaining > 0) {
        int best = -1;
        for (int e = 0; e < universe; ++e)
            if (count[e] > 0 && (best < 0 || count[e] > count[best])) best = e;
        picked.push_back(best);
        for (size_t i = 0; i < sets.size(); ++i) {
            if (covered[i]) continue;
            if (!std::binary_search(sets[i].begin(), sets[i].end(), best)) continue;
            covered[i] = 1;
            --remaining;
            for (int e : sets[i]) --count[e];
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

struct BudgetState {
    uint64_t max_nodes;
    Clock::time_point deadline;
    uint64_t nodes = 0;
    bool exceeded = false;

    bool charge() {
        if (exceeded) return false;
        if (++nodes > max_nodes || Clock::now() > deadline) {
            exceeded = true;
            return false;
        }
        return true;
    }
};

class HittingSetBB {
public:
    HittingSetBB(const std::vector<std::vector<int>>& sets, int universe, BudgetState& budget)
        : sets_(sets), universe_(universe), budget_(budget) {
        cover_count_.assign(sets_.size(), 0);
        element_sets_.assign(universe_, {});
        for (size_t i = 0; i < sets_.size(); ++i)
            for (int e : sets_[i]) element_sets_[e].push_back(static_cast<int>(i));
    }

    std::vector<int> solve() {
        best_ = greedy_hit(sets_, universe_);
        if (best_.size() <= 1 || sets_.empty()) return best_;
        chosen_.clear();
        dfs();
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Node-disjoint (element-disjoint) packing of uncovered sets: each needs
    // its own removal, so the packing size is a valid lower bound.
    size_t packing_bound() {
        used_.assign(universe_, 0);
        size_t bound = 0;
        for (size_t i = 0; i < sets_.size(); ++i) {
            if (cover_count_[i] > 0) continue;
            bool disjoint = true;
            for (int e : sets_[i])
                if (used_[e]) { disjoint = false; break; }
            if (!disjoint) continue;
            for (int e : sets_[i]) used_[e] = 1;
            ++bound;
        }
        return bound;
    }

    void choose(int e) {
        chosen_.push_back(e);
        for (int i : element_sets_[e]) ++cover_count_[i];
    }

    void unchoose(int e) {
        chosen_.pop_back();
        for (int i : element_sets_[e]) --cover_count_[i];
    }

    void dfs() {
        if (!budget_.charge()) return;
        // smallest uncovered set, ties toward the earliest one
        int pick = -1;
        for (size_t i = 0; i < sets_.size(); ++i) {
            if (cover_count_[i] > 0) continue;
            if (pick < 0 || sets_[i].size() < sets_[pick].size())
                pick = static_cast<int>(i);
        }
        if (pick < 0) {
            if (chosen_.size() < best_.size()) best_ = chosen_;
            return;
        }
        if (chosen_.size() + packing_bound() >= best_.size()) return;
        for (int e : sets_[pick]) {
            choose(e);
            dfs();
            unchoose(e);
            if (budget_.exceeded) return;
        }
    }

    const std::vector<std::vector<int>>& sets_;
    int universe_;
    BudgetState& budget_;
    std::vector<std::vector<int>> element_sets_;
    std::vector<int> cover_count_;
    std::vector<int> chosen_, best_;
    std::vector<char> used_;
};

// ---------------------------------------------------------------------------
// Lazy constraint generation shared by the exact node and edge solvers.
// ---------------------------------------------------------------------------

// Walks dependency support backwards through the surviving subgraph until a
// node repeats; the visited segment is a directed cycle (Lemma 1: a nonempty
// operating set always contains one). Deterministic: starts at the smallest
// surviving node and always steps to the smallest usable in-neighbor.
std::vector<int> extract_surviving_cycle(const DigraphIndex& idx,
                                         const std::vector<char>& alive,
                                         const std::vector<char>& arc_removed) {
    const int n = static_cast<int>(idx.size());
    // in-neighbors annotated with their arc index
    std::vector<std::vector<std::pair<int, int>>> in_arcs(n);
    for (size_t k = 0; k < idx.arcs.size(); ++k)
        in_arcs[idx.arcs[k].second].emplace_back(idx.arcs[k].first, static_cast<int>(k));
    for (auto& v : in_arcs) std::sort(v.begin(), v.end());

    int start = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v]) { start = v; break; }
    if (start < 0)
        throw std::logic_error("no surviving node to extract a cycle from");

    std::vector<int> position(n, -1);
    std::vector<int> path;
    int cur = start;
    for (;;) {
        position[cur] = static_cast<int>(path.size());
        path.push_back(cur);
        int prev = -1;
        for (const auto& [u, k] : in_arcs[cur]) {
            if (alive[u] && !arc_removed[k]) { prev = u; break; }
        }
        if (prev < 0)
            throw std::logic_error("operating node without surviving in-arc");
        if (position[prev] >= 0) {
            // forward cycle: prev -> path.back() -> ... -> path[position[prev]]
            std::vector<int> cycle;
            for (int i = static_cast<int>(path.size()) - 1; i >= position[prev]; --i)
                cycle.push_back(path[i]);
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                        cycle.end());
            return cycle;
        }
        cur = prev;
    }
}

struct ExactContext {
    const NetworkSpec& spec;
    RemovalVariant variant;
    Budget budget;

    DepDigraph digraph;
    DigraphIndex idx;
    CascadeEngine engine;
    std::vector<int> to_engine;     // digraph node index -> engine node index
    std::vector<int> from_engine;   // engine node index -> digraph node index
    std::map<std::pair<int, int>, int> arc_of;

    ExactContext(const NetworkSpec& s, RemovalVariant v, const Budget& b)
        : spec(s), variant(v), budget(b),
          digraph(project_dependency_digraph(s)), idx(digraph), engine(s) {
        to_engine.resize(idx.size());
        from_engine.assign(engine.node_count(), -1);
        for (size_t i = 0; i < idx.size(); ++i) {
            to_engine[i] = engine.node_index(idx.id_of(static_cast<int>(i)));
            from_engine[to_engine[i]] = static_cast<int>(i);
        }
        for (size_t k = 0; k < idx.arcs.size(); ++k)
            arc_of[idx.arcs[k]] = static_cast<int>(k);
    }

    int element_count() const {
        return variant == RemovalVariant::Node ? static_cast<int>(idx.size())
                                               : static_cast<int>(idx.arcs.size());
    }

    bool total_failure(const std::vector<int>& elements) const {
        if (variant == RemovalVariant::Node) {
            std::vector<int> removed;
            removed.reserve(elements.size());
            for (int v : elements) removed.push_back(to_engine[v]);
            return engine.total_failure_nodes(removed);
        }
        return engine.total_failure_arcs(elements);
    }

    // Elements of the separation constraint violated by `elements`: the
    // nodes (or arcs) of one cycle surviving it.
    std::vector<int> separating_cycle(const std::vector<int>& elements) const {
        std::vector<char> alive(idx.size(), 0);
        std::vector<char> arc_removed(idx.arcs.size(), 0);
        std::vector<int> removed_nodes, removed_arcs;
        if (variant == RemovalVariant::Node) {
            for (int v : elements) removed_nodes.push_back(to_engine[v]);
        } else {
            removed_arcs = elements;
            for (int k : elements) {
                arc_removed[k] = 1;
                // pairwise removal in bidirectional networks
                auto it = arc_of.find({idx.arcs[k].second, idx.arcs[k].first});
                if (spec.mode == Mode::Bidirectional && it != arc_of.end())
                    arc_removed[it->second] = 1;
            }
        }
        for (int e : engine.operating_nodes(removed_nodes, removed_arcs)) {
            int v = from_engine[e];
            if (v >= 0) alive[v] = 1;
        }
        std::vector<int> cycle_nodes = extract_surviving_cycle(idx, alive, arc_removed);
        if (variant == RemovalVariant::Node) {
            std::sort(cycle_nodes.begin(), cycle_nodes.end());
            return cycle_nodes;
        }
        std::vector<int> arcs;
        for (size_t i = 0; i < cycle_nodes.size(); ++i) {
            int a = cycle_nodes[i];
            int b = cycle_nodes[(i + 1) % cycle_nodes.size()];
            arcs.push_back(arc_of.at({a, b}));
        }
        std::sort(arcs.begin(), arcs.end());
        return arcs;
    }

    RemovalSet to_removal(const std::vector<int>& elements) const {
        if (variant == RemovalVariant::Node) {
            std::set<std::string> ids;
            for (int v : elements) ids.insert(idx.id_of(v));
            return RemovalSet::of_nodes(std::move(ids));
        }
        std::vector<Edge> arcs;
        for (int k : elements) arcs.push_back(digraph.arcs[k]);
        return RemovalSet::of_edges(std::move(arcs));
    }
};

SolveReport exact_mtfr(const NetworkSpec& spec, RemovalVariant variant, const Budget& budget) {
    require_star(spec);
    const auto t0 = Clock::now();
    ExactContext ctx(spec, variant, budget);
    BudgetState state{budget.max_branch_nodes,
                      t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(budget.max_seconds))};

    std::vector<std::vector<int>> working;
    std::vector<int> candidate;
    bool optimal = false;
    for (;;) {
        HittingSetBB bb(working, ctx.element_count(), state);
        candidate = bb.solve();
        if (state.exceeded) break;
        if (ctx.total_failure(candidate)) {
            // candidate is optimal for a relaxation and feasible for the
            // full problem, hence optimal for the full problem
            optimal = true;
            break;
        }
        working.push_back(ctx.separating_cycle(candidate));
    }

    if (!optimal) {
        // budget ran out: complete the incumbent greedily so the report is
        // still a verified total failure
        std::vector<int> sorted(candidate);
        std::sort(sorted.begin(), sorted.end());
        while (!ctx.total_failure(sorted)) {
            std::vector<int> cycle = ctx.separating_cycle(sorted);
            sorted.push_back(cycle.front());
            std::sort(sorted.begin(), sorted.end());
        }
        candidate = sorted;
    }

    SolveReport report;
    report.removal = ctx.to_removal(candidate);
    report.size = report.removal.size();
    report.method = SolveMethod::ExactBB;
    report.optimal = optimal;
    report.stats.cycles_considered = working.size();
    report.stats.branch_nodes = state.nodes;
    verify_report(ctx.engine, report);
    report.stats.runtime_ms = ms_since(t0);
    return report;
}

} // namespace

SolveReport exact_node_mtfr(const NetworkSpec& spec, const Budget& budget) {
    return exact_mtfr(spec, RemovalVariant::Node, budget);
}

SolveReport exact_edge_mtfr(const NetworkSpec& spec, const Budget& budget) {
    if (spec.mode != Mode::Unidirectional)
        throw Error(ErrorCode::NotUnidirectional,
                    "edge-exact applies to unidirectional networks; use bidir_edge_mtfr");
    return exact_mtfr(spec, RemovalVariant::Edge, budget);
}

// ---------------------------------------------------------------------------
// Brute force oracle
// ---------------------------------------------------------------------------

SolveReport brute_force_mtfr(const NetworkSpec& spec, RemovalVariant variant) {
    if (spec.relay_count() > 24)
        throw Error(ErrorCode::TooLarge, "brute force is guarded to at most 24 relays");
    const auto t0 = Clock::now();
    CascadeEngine engine(spec);

    // Universe, ordered lexicographically. For edge removals in
    // bidirectional networks the unit is the dependency pair.
    std::vector<std::string> node_universe;
    std::vector<Edge> edge_universe;
    if (variant == RemovalVariant::Node) {
        node_universe = spec.relay_ids();
    } else if (spec.mode == Mode::Bidirectional) {
        edge_universe = spec.dependency_pairs();
    } else {
        edge_universe = spec.dep_edges;
    }
    const size_t m = variant == RemovalVariant::Node ? node_universe.size()
                                                     : edge_universe.size();

    std::vector<int> element_index(m);
    if (variant == RemovalVariant::Node) {
        for (size_t i = 0; i < m; ++i) element_index[i] = engine.node_index(node_universe[i]);
    } else {
        for (size_t i = 0; i < m; ++i)
            element_index[i] = engine.arc_index(edge_universe[i].first, edge_universe[i].second);
    }

    uint64_t evaluated = 0;
    std::vector<int> picked;
    auto found = [&](const std::vector<size_t>& combo) {
        picked.clear();
        for (size_t i : combo) picked.push_back(element_index[i]);
        ++evaluated;
        return variant == RemovalVariant::Node ? engine.total_failure_nodes(picked)
                                               : engine.total_failure_arcs(picked);
    };

    std::vector<size_t> combo;
    bool done = false;
    for (size_t k = 0; k <= m && !done; ++k) {
        combo.resize(k);
        for (size_t i = 0; i < k; ++i) combo[i] = i;
        for (;;) {
            if (found(combo)) { done = true; break; }
            // next combination in lexicographic order
            size_t i = k;
            while (i > 0 && combo[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    if (!done)
        throw std::logic_error("no removal set yields total failure"); // unreachable: full set always does

    SolveReport report;
    if (variant == RemovalVariant::Node) {
        std::set<std::string> ids;
        for (size_t i : combo) ids.insert(node_universe[i]);
        report.removal = RemovalSet::of_nodes(std::move(ids));
    } else {
        std::vector<Edge> arcs;
        for (size_t i : combo) arcs.push_back(edge_universe[i]);
        report.removal = RemovalSet::of_edges(std::move(arcs));
    }
    report.size = report.removal.size();
    report.method = SolveMethod::BruteForce;
    report.optimal = true;
    report.stats.branch_nodes = evaluated;
    verify_report(engine, report);
    report.stats.runtime_ms = ms_since(t0);
    return report;
}

// ---------------------------------------------------------------------------
// Greedy heuristics
// ---------------------------------------------------------------------------

std::vector<std::string> greedy_hitting_set(const std::vector<std::vector<std::string>>& sets) {
    std::vector<char> covered(sets.size(), 0);
    std::map<std::string, int> count;
    for (const auto& s : sets)
        for (const auto& e : s) ++count[e];
    size_t remaining = sets.size();
    std::vector<std::string> picked;
    while (remaining > 0) {
        const std::string* best = nullptr;
        for (const auto& [e, c] : count)
            if (c > 0 && (!best || c > count[*best])) best = &e;
        picked.push_back(*best);
        const std::string chosen = *best;
        for (size_t i = 0; i < sets.size(); ++i) {
            if (covered[i]) continue;
            if (std::find(sets[i].begin(), sets[i].end(), chosen) == sets[i].end()) continue;
            covered[i] = 1;
            --remaining;
            for (const auto& e : sets[i]) --count[e];
        }
    }
    return picked;
}

SolveReport greedy_cycle_hitting(const NetworkSpec& spec, const CycleSet& cs) {
    require_star(spec);
    if (cs.truncated)
        throw Error(ErrorCode::TruncatedInput,
                    "cycle set is truncated; greedy hitting needs the complete set");
    const auto t0 = Clock::now();
    std::vector<std::string> picked = greedy_hitting_set(cs.cycles);

    SolveReport report;
    report.removal = RemovalSet::of_nodes({picked.begin(), picked.end()});
    report.size = report.removal.size();
    report.method = SolveMethod::GreedyCycle;
    report.optimal = false;
    report.stats.cycles_considered = cs.cycles.size();
    verify_report(CascadeEngine(spec), report);
    report.stats.runtime_ms = ms_since(t0);
    return report;
}

SolveReport greedy_cycle_hitting(const NetworkSpec& spec, size_t cap) {
    return greedy_cycle_hitting(spec, enumerate_cycles(project_dependency_digraph(spec), cap));
}

SolveReport greedy_degree(const NetworkSpec& spec) {
    require_star(spec);
    const auto t0 = Clock::now();
    DepDigraph working = project_dependency_digraph(spec);
    std::set<std::string> removal;

    for (;;) {
        working = prune_acyclic_arcs(working);
        if (working.arcs.empty()) break;

        std::map<std::string, int> out_degree;
        for (const auto& [a, b] : working.arcs) ++out_degree[a];
        std::string pick;
        int best = -1;
        for (const auto& id : working.nodes) {
            auto it = out_degree.find(id);
            const int d = it == out_degree.end() ? 0 : it->second;
            if (d > best) { best = d; pick = id; }
        }
        removal.insert(pick);

        // cascade inside the working digraph: peel support-less nodes
        std::set<std::string> alive(working.nodes.begin(), working.nodes.end());
        alive.erase(pick);
        for (bool changed = true; changed;) {
            changed = false;
            std::map<std::string, int> in_degree;
            for (const auto& [a, b] : working.arcs)
                if (alive.count(a) && alive.count(b)) ++in_degree[b];
            for (auto it = alive.begin(); it != alive.end();) {
                if (in_degree[*it] == 0) {
                    it = alive.erase(it);
                    changed = true;
                } else {
                    ++it;
                }
            }
        }

        DepDigraph next;
        for (const auto& id : working.nodes)
            if (alive.count(id)) {
                next.nodes.push_back(id);
                next.side_of[id] = working.side_of.at(id);
            }
        for (const auto& arc : working.arcs)
            if (alive.count(arc.first) && alive.count(arc.second)) next.arcs.push_back(arc);
        working = std::move(next);
    }

    SolveReport report;
    report.removal = RemovalSet::of_nodes(std::move(removal));
    report.size = report.removal.size();
    report.method = SolveMethod::GreedyDegree;
    report.optimal = false;
    verify_report(CascadeEngine(spec), report);
    report.stats.runtime_ms = ms_since(t0);
    return report;
}

// ---------------------------------------------------------------------------
// Bidirectional: matching, vertex cover, edge-all
// ---------------------------------------------------------------------------

namespace {

struct BipartiteView {
    std::vector<std::string> left, right; // power / comm, sorted
    std::vector<std::vector<int>> adj;    // left index -> right indices, ascending
};

BipartiteView bipartite_view(const DepDigraph& g) {
    for (const auto& [a, b] : g.arcs)
        if (!std::binary_search(g.arcs.begin(), g.arcs.end(), Edge{b, a}))
            throw Error(ErrorCode::NotBidirectional,
                        "arc " + a + ">" + b + " has no reverse arc");
    BipartiteView view;
    std::map<std::string, int> right_index;
    for (const auto& id : g.nodes) {
        if (g.side_of.at(id) == Side::Power) {
            view.left.push_back(id);
        } else {
            right_index[id] = static_cast<int>(view.right.size());
            view.right.push_back(id);
        }
    }
    view.adj.assign(view.left.size(), {});
    for (size_t i = 0; i < view.left.size(); ++i) {
        for (const auto& [a, b] : g.arcs)
            if (a == view.left[i]) view.adj[i].push_back(right_index.at(b));
        std::sort(view.adj[i].begin(), view.adj[i].end());
    }
    return view;
}

// Kuhn's augmenting-path matching; left nodes tried in ascending id order.
struct MatchingState {
    std::vector<int> match_left, match_right; // partner index or -1
};

MatchingState kuhn(const BipartiteView& view) {
    MatchingState m;
    m.match_left.assign(view.left.size(), -1);
    m.match_right.assign(view.right.size(), -1);
    std::vector<char> visited;
    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int r : view.adj[u]) {
            if (visited[r]) continue;
            visited[r] = 1;
            if (m.match_right[r] < 0 || try_augment(m.match_right[r])) {
                m.match_left[u] = r;
                m.match_right[r] = u;
                return true;
            }
        }
        return false;
    };
    for (size_t u = 0; u < view.left.size(); ++u) {
        visited.assign(view.right.size(), 0);
        try_augment(static_cast<int>(u));
    }
    return m;
}

} // namespace

Matching max_matching(const DepDigraph& g) {
    BipartiteView view = bipartite_view(g);
    MatchingState m = kuhn(view);
    Matching result;
    for (size_t u = 0; u < view.left.size(); ++u)
        if (m.match_left[u] >= 0)
            result.pairs.emplace_back(view.left[u], view.right[m.match_left[u]]);
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

SolveReport bidir_node_mtfr(const NetworkSpec& spec) {
    if (spec.mode != Mode::Bidirectional)
        throw Error(ErrorCode::NotBidirectional, "vertex-cover solver needs a bidirectional network");
    require_star(spec);
    const auto t0 = Clock::now();
    DepDigraph g = project_dependency_digraph(spec);
    BipartiteView view = bipartite_view(g);
    MatchingState m = kuhn(view);
    size_t matching_size = 0;
    for (int r : m.match_left)
        if (r >= 0) ++matching_size;

    // Koenig: alternate from the unmatched left nodes (non-matching edges
    // left->right, matching edges right->left); cover = (L \ Z) u (R n Z).
    std::vector<char> z_left(view.left.size(), 0), z_right(view.right.size(), 0);
    std::vector<int> queue;
    for (size_t u = 0; u < view.left.size(); ++u)
        if (m.match_left[u] < 0) {
            z_left[u] = 1;
            queue.push_back(static_cast<int>(u));
        }
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int r : view.adj[u]) {
            if (m.match_left[u] == r || z_right[r]) continue;
            z_right[r] = 1;
            int u2 = m.match_right[r];
            if (u2 >= 0 && !z_left[u2]) {
                z_left[u2] = 1;
                queue.push_back(u2);
            }
        }
    }

    std::set<std::string> cover;
    for (size_t u = 0; u < view.left.size(); ++u)
        if (!z_left[u] && m.match_left[u] >= 0) cover.insert(view.left[u]);
    for (size_t r = 0; r < view.right.size(); ++r)
        if (z_right[r]) cover.insert(view.right[r]);
    if (cover.size() != matching_size)
        throw std::logic_error("Koenig equality violated");

    SolveReport report;
    report.removal = RemovalSet::of_nodes(std::move(cover));
    report.size = report.removal.size();
    report.method = SolveMethod::VertexCover;
    report.optimal = true;
    verify_report(CascadeEngine(spec), report);
    report.stats.runtime_ms = ms_since(t0);
    return report;
}

SolveReport bidir_edge_mtfr(const NetworkSpec& spec) {
    if (spec.mode != Mode::Bidirectional)
        throw Error(ErrorCode::NotBidirectional, "edge-all solver needs a bidirectional network");
    require_star(spec);
    const auto t0 = Clock::now();
    SolveReport report;
    report.removal = RemovalSet::of_edges(spec.dependency_pairs());
    report.size = report.removal.size();
    report.method = SolveMethod::BidirEdgeAll;
    report.optimal = true;
    verify_report(CascadeEngine(spec), report);
    report.stats.runtime_ms = ms_since(t0);
    return report;
}

} // namespace mtfr
