#ifndef MTFR_DIGRAPH_INDEX_HPP
#define MTFR_DIGRAPH_INDEX_HPP

#include <algorithm>
#include <vector>

#include "mtfr/network.hpp"

namespace mtfr {

// Index view of a DepDigraph. Node order follows the digraph's sorted id
// list, arc order its sorted arc list, so index comparisons equal
// lexicographic id comparisons everywhere tie-breaking matters.
struct DigraphIndex {
    const DepDigraph* g = nullptr;
    std::vector<std::vector<int>> out, in;       // neighbor indices, ascending
    std::vector<std::pair<int, int>> arcs;       // (from,to) per arc index

    explicit DigraphIndex(const DepDigraph& dg) : g(&dg) {
        const size_t n = dg.nodes.size();
        out.assign(n, {});
        in.assign(n, {});
        arcs.reserve(dg.arcs.size());
        for (const auto& [a, b] : dg.arcs) {
            int ia = index_of(a), ib = index_of(b);
            arcs.emplace_back(ia, ib);
            out[ia].push_back(ib);
            in[ib].push_back(ia);
        }
        for (auto& v : out) std::sort(v.begin(), v.end());
        for (auto& v : in) std::sort(v.begin(), v.end());
    }

    int index_of(const std::string& id) const {
        auto it = std::lower_bound(g->nodes.begin(), g->nodes.end(), id);
        return static_cast<int>(it - g->nodes.begin());
    }

    const std::string& id_of(int i) const { return g->nodes[i]; }
    size_t size() const { return g->nodes.size(); }
};

} // namespace mtfr

#endif
