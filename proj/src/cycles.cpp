#include "mtfr/cycles.hpp"

#include <algorithm>
#include <set>

#include "digraph_index.hpp"

namespace mtfr {

namespace {

// Iterative Tarjan restricted to nodes with allowed[v] != 0.
// Returns component id per node (-1 for excluded nodes).
std::vector<int> tarjan_components(const DigraphIndex& idx,
                                   const std::vector<char>& allowed,
                                   int& component_count) {
    const int n = static_cast<int>(idx.size());
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    component_count = 0;
    int counter = 0;

    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (!allowed[root] || num[root] != -1) continue;
        frames.push_back({root, 0});
        num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = idx.out[f.v];
            if (f.next < succ.size()) {
                int w = succ[f.next++];
                if (!allowed[w]) continue;
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == num[v]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = component_count;
                        if (w == v) break;
                    }
                    ++component_count;
                }
            }
        }
    }
    return comp;
}

} // namespace

std::vector<std::vector<std::string>> sccs(const DepDigraph& g) {
    DigraphIndex idx(g);
    std::vector<char> allowed(idx.size(), 1);
    int count = 0;
    std::vector<int> comp = tarjan_components(idx, allowed, count);

    std::vector<std::vector<int>> members(count);
    for (size_t v = 0; v < idx.size(); ++v)
        members[comp[v]].push_back(static_cast<int>(v));
    // Number components by smallest contained id; members are already
    // ascending because node indices follow sorted ids.
    std::sort(members.begin(), members.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    std::vector<std::vector<std::string>> out;
    out.reserve(members.size());
    for (const auto& m : members) {
        std::vector<std::string> ids;
        ids.reserve(m.size());
        for (int v : m) ids.push_back(idx.id_of(v));
        out.push_back(std::move(ids));
    }
    return out;
}

DepDigraph prune_acyclic_arcs(const DepDigraph& g) {
    DigraphIndex idx(g);
    std::vector<char> allowed(idx.size(), 1);
    int count = 0;
    std::vector<int> comp = tarjan_components(idx, allowed, count);

    DepDigraph pruned;
    pruned.nodes = g.nodes;
    pruned.side_of = g.side_of;
    for (size_t k = 0; k < idx.arcs.size(); ++k) {
        auto [a, b] = idx.arcs[k];
        if (comp[a] == comp[b]) pruned.arcs.push_back(g.arcs[k]);
    }
    std::sort(pruned.arcs.begin(), pruned.arcs.end());
    return pruned;
}

namespace {

// Johnson's blocked search for the circuits whose least node is `start`,
// restricted to start's SCC within the subgraph on nodes >= start.
struct CircuitSearch {
    const DigraphIndex& idx;
    const std::vector<int>& comp;
    int start;
    size_t cap;
    CycleSet& out;
    bool& stop;

    std::vector<char> blocked;
    std::vector<std::set<int>> blocked_by;
    std::vector<int> path;

    CircuitSearch(const DigraphIndex& i, const std::vector<int>& c, int s,
                  size_t cp, CycleSet& o, bool& st)
        : idx(i), comp(c), start(s), cap(cp), out(o), stop(st) {
        blocked.assign(idx.size(), 0);
        blocked_by.assign(idx.size(), {});
    }

    bool in_scope(int w) const { return w >= start && comp[w] == comp[start]; }

    void unblock(int v) {
        blocked[v] = 0;
        std::set<int> waiting;
        waiting.swap(blocked_by[v]);
        for (int w : waiting)
            if (blocked[w]) unblock(w);
    }

    bool circuit(int v) {
        bool found = false;
        path.push_back(v);
        blocked[v] = 1;
        for (int w : idx.out[v]) {
            if (stop) break;
            if (!in_scope(w)) continue;
            if (w == start) {
                if (out.cycles.size() >= cap) {
                    out.truncated = true;
                    stop = true;
                    break;
                }
                std::vector<std::string> cycle;
                cycle.reserve(path.size());
                for (int u : path) cycle.push_back(idx.id_of(u));
                out.cycles.push_back(std::move(cycle));
                found = true;
            } else if (!blocked[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w : idx.out[v])
                if (in_scope(w)) blocked_by[w].insert(v);
        }
        path.pop_back();
        return found;
    }
};

} // namespace

CycleSet enumerate_cycles(const DepDigraph& g, size_t cap) {
    CycleSet result;
    DigraphIndex idx(g);
    const int n = static_cast<int>(idx.size());
    bool stop = false;

    std::vector<char> allowed(n, 0);
    for (int start = 0; start < n && !stop; ++start) {
        std::fill(allowed.begin(), allowed.end(), 0);
        for (int v = start; v < n; ++v) allowed[v] = 1;
        int count = 0;
        std::vector<int> comp = tarjan_components(idx, allowed, count);
        // Only an SCC with an internal arc can carry a circuit through start.
        bool has_arc = false;
        for (int w : idx.out[start])
            if (w >= start && comp[w] == comp[start]) has_arc = true;
        if (!has_arc) continue;
        CircuitSearch search(idx, comp, start, cap, result, stop);
        search.circuit(start);
    }

    for (size_t c = 0; c < result.cycles.size(); ++c)
        for (const auto& id : result.cycles[c])
            result.node_incidence[id].push_back(c);
    return result;
}

} // namespace mtfr
