#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "fixtures.hpp"
#include "mtfr/cycles.hpp"
#include "mtfr/rng.hpp"

using namespace mtfr;

namespace {

// Independent elementary-cycle counter: plain simple-path DFS, counting each
// cycle once at its smallest node. No blocking, no shared code with the
// enumerator.
size_t brute_count_cycles(const DepDigraph& g) {
    const size_t n = g.nodes.size();
    std::vector<std::vector<int>> adj(n);
    auto index_of = [&](const std::string& id) {
        return static_cast<int>(std::lower_bound(g.nodes.begin(), g.nodes.end(), id) -
                                g.nodes.begin());
    };
    for (const auto& [a, b] : g.arcs) adj[index_of(a)].push_back(index_of(b));

    size_t count = 0;
    std::vector<char> on_path(n, 0);
    std::function<void(int, int)> walk = [&](int start, int v) {
        on_path[v] = 1;
        for (int w : adj[v]) {
            if (w == start) {
                ++count;
            } else if (w > start && !on_path[w]) {
                walk(start, w);
            }
        }
        on_path[v] = 0;
    };
    for (size_t s = 0; s < n; ++s) walk(static_cast<int>(s), static_cast<int>(s));
    return count;
}

DepDigraph digraph_of(const NetworkSpec& spec) { return project_dependency_digraph(spec); }

// Random bipartite digraph over k relays per side, arc probability ~p/q.
DepDigraph random_bipartite(size_t k, uint64_t seed, uint32_t p, uint32_t q) {
    DepDigraph g;
    for (size_t i = 1; i <= k; ++i) {
        g.nodes.push_back("R" + std::to_string(i));
        g.nodes.push_back("S" + std::to_string(i));
        g.side_of["R" + std::to_string(i)] = Side::Comm;
        g.side_of["S" + std::to_string(i)] = Side::Power;
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    Rng rng(seed);
    for (size_t i = 1; i <= k; ++i) {
        for (size_t j = 1; j <= k; ++j) {
            const std::string s = "S" + std::to_string(i), r = "R" + std::to_string(j);
            if (rng.chance(p, q)) g.arcs.emplace_back(s, r);
            if (rng.chance(p, q)) g.arcs.emplace_back(r, s);
        }
    }
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

} // namespace

TEST_CASE("strongly connected components") {
    const auto one = sccs(digraph_of(fixtures::six_cycle()));
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 6);

    const auto two = sccs(digraph_of(fixtures::two_disjoint_two_cycles()));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<std::string>{"R1", "S1"});
    CHECK(two[1] == std::vector<std::string>{"R2", "S2"});

    DepDigraph path;
    path.nodes = {"R1", "S1", "S2"};
    path.side_of = {{"R1", Side::Comm}, {"S1", Side::Power}, {"S2", Side::Power}};
    path.arcs = {{"R1", "S2"}, {"S1", "R1"}};
    const auto three = sccs(path);
    CHECK(three.size() == 3);
}

TEST_CASE("pruning drops exactly the arcs outside their endpoints' SCC") {
    const DepDigraph g = digraph_of(fixtures::six_cycle_with_dead_end());
    const auto comps = sccs(g);
    // the dead-end arc's endpoints sit in different components
    auto comp_of = [&](const std::string& id) {
        for (size_t i = 0; i < comps.size(); ++i)
            if (std::find(comps[i].begin(), comps[i].end(), id) != comps[i].end()) return i;
        return comps.size();
    };
    CHECK(comp_of("R3") != comp_of("S2"));

    const DepDigraph pruned = prune_acyclic_arcs(g);
    CHECK(pruned.nodes == g.nodes);
    CHECK(pruned.arcs.size() == 6);
    CHECK(std::find(pruned.arcs.begin(), pruned.arcs.end(), Edge{"R3", "S2"}) ==
          pruned.arcs.end());

    // acyclic digraph: everything goes
    DepDigraph acyclic;
    acyclic.nodes = {"R1", "S1", "S2"};
    acyclic.side_of = {{"R1", Side::Comm}, {"S1", Side::Power}, {"S2", Side::Power}};
    acyclic.arcs = {{"R1", "S2"}, {"S1", "R1"}};
    CHECK(prune_acyclic_arcs(acyclic).arcs.empty());

    // one big SCC: nothing goes
    const DepDigraph cycle = digraph_of(fixtures::six_cycle());
    CHECK(prune_acyclic_arcs(cycle) == cycle);
}

TEST_CASE("pruning is idempotent and preserves every cycle") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const DepDigraph g = random_bipartite(3, seed, 2, 5);
        const DepDigraph once = prune_acyclic_arcs(g);
        CHECK(prune_acyclic_arcs(once) == once);
        CHECK(enumerate_cycles(once, 100000).cycles == enumerate_cycles(g, 100000).cycles);
    }
}

TEST_CASE("six-cycle enumerates to a single cycle") {
    const CycleSet cs = enumerate_cycles(digraph_of(fixtures::six_cycle()), 100);
    REQUIRE(cs.cycles.size() == 1);
    CHECK(cs.cycles[0].size() == 6);
    CHECK_FALSE(cs.truncated);
    CHECK(cs.cycles[0].front() == "R1"); // rotated to the smallest id
}

TEST_CASE("complete bipartite 2x2 bidirectional has six elementary cycles") {
    const CycleSet cs = enumerate_cycles(digraph_of(fixtures::k22_bidir()), 100);
    REQUIRE(cs.cycles.size() == 6);
    size_t twos = 0, fours = 0;
    for (const auto& c : cs.cycles) {
        if (c.size() == 2) ++twos;
        if (c.size() == 4) ++fours;
    }
    CHECK(twos == 4);
    CHECK(fours == 2);
    CHECK_FALSE(cs.truncated);

    // node_incidence is consistent
    for (size_t i = 0; i < cs.cycles.size(); ++i) {
        for (const auto& id : cs.cycles[i]) {
            const auto& inc = cs.node_incidence.at(id);
            CHECK(std::find(inc.begin(), inc.end(), i) != inc.end());
        }
    }
}

TEST_CASE("acyclic digraphs enumerate to nothing") {
    DepDigraph acyclic;
    acyclic.nodes = {"R1", "S1", "S2"};
    acyclic.side_of = {{"R1", Side::Comm}, {"S1", Side::Power}, {"S2", Side::Power}};
    acyclic.arcs = {{"R1", "S2"}, {"S1", "R1"}};
    const CycleSet cs = enumerate_cycles(acyclic, 100);
    CHECK(cs.cycles.empty());
    CHECK_FALSE(cs.truncated);
}

TEST_CASE("the cap truncates only when more cycles exist") {
    const DepDigraph g = digraph_of(fixtures::k22_bidir());
    const CycleSet exact_fit = enumerate_cycles(g, 6);
    CHECK(exact_fit.cycles.size() == 6);
    CHECK_FALSE(exact_fit.truncated);

    const CycleSet clipped = enumerate_cycles(g, 5);
    CHECK(clipped.cycles.size() == 5);
    CHECK(clipped.truncated);
    // the first five match the untruncated enumeration order
    for (size_t i = 0; i < 5; ++i) CHECK(clipped.cycles[i] == exact_fit.cycles[i]);
}

TEST_CASE("cycles alternate sides and bidirectional arcs appear as 2-cycles") {
    const DepDigraph g = digraph_of(fixtures::k22_bidir());
    const CycleSet cs = enumerate_cycles(g, 100);
    for (const auto& cycle : cs.cycles) {
        CHECK(cycle.size() % 2 == 0);
        for (size_t i = 0; i < cycle.size(); ++i)
            CHECK(g.side_of.at(cycle[i]) != g.side_of.at(cycle[(i + 1) % cycle.size()]));
    }
    std::set<std::set<std::string>> two_cycles;
    for (const auto& cycle : cs.cycles)
        if (cycle.size() == 2) two_cycles.insert({cycle[0], cycle[1]});
    for (const auto& [a, b] : g.arcs) CHECK(two_cycles.count({a, b}) == 1);
}

TEST_CASE("enumeration count matches a brute-force count on random digraphs") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const DepDigraph g = random_bipartite(4, seed, 1, 3); // 8 nodes
        const CycleSet cs = enumerate_cycles(g, 1000000);
        REQUIRE_FALSE(cs.truncated);
        CHECK(cs.cycles.size() == brute_count_cycles(g));

        // every reported cycle is elementary and its arcs exist
        for (const auto& cycle : cs.cycles) {
            std::set<std::string> uniq(cycle.begin(), cycle.end());
            CHECK(uniq.size() == cycle.size());
            for (size_t i = 0; i < cycle.size(); ++i) {
                const Edge arc{cycle[i], cycle[(i + 1) % cycle.size()]};
                CHECK(std::binary_search(g.arcs.begin(), g.arcs.end(), arc));
            }
        }
    }
}
