#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "mtfr/cascade.hpp"
#include "mtfr/cycles.hpp"
#include "mtfr/randgen.hpp"
#include "mtfr/rng.hpp"

using namespace mtfr;

namespace {

RemovalSet remove_nodes(std::initializer_list<std::string> ids) {
    return RemovalSet::of_nodes(std::set<std::string>(ids));
}

// One-at-a-time peeling with a seeded random choice of which failing node
// falls next; the greatest fixed point must not depend on the order.
std::set<std::string> peel_one_at_a_time(const NetworkSpec& spec, const RemovalSet& removals,
                                         uint64_t seed) {
    Rng rng(seed);
    std::set<std::string> removed = removals.nodes;
    for (;;) {
        RemovalSet current = RemovalSet::of_nodes(removed);
        CascadeTrace t = cascade_trace(spec, current);
        if (t.rounds.empty()) return t.surviving;
        std::vector<std::string> failing(t.rounds.front().begin(), t.rounds.front().end());
        removed.insert(failing[rng.index(failing.size())]);
    }
}

} // namespace

TEST_CASE("single-failure fixture cascades in the published order") {
    const NetworkSpec spec = fixtures::cascade_example();
    const CascadeTrace t = cascade_trace(spec, remove_nodes({"S4"}));
    REQUIRE(t.rounds.size() == 3);
    CHECK(t.rounds[0] == std::set<std::string>{"R3"});
    CHECK(t.rounds[1] == std::set<std::string>{"R2", "S1", "S3"});
    CHECK(t.rounds[2] == std::set<std::string>{"R1", "S2"});
    CHECK(t.surviving.empty());
    CHECK(operating_set(spec, remove_nodes({"S4"})).empty());
}

TEST_CASE("without the control dependency the same failure stays put") {
    const NetworkSpec spec = fixtures::cascade_example_power_only();
    const CascadeTrace t = cascade_trace(spec, remove_nodes({"S4"}));
    CHECK(t.rounds.empty());
    CHECK(t.surviving == std::set<std::string>{"R0", "S1", "S2", "S3"});
}

TEST_CASE("six-cycle star fails sequentially after removing S1") {
    const CascadeTrace t = cascade_trace(fixtures::six_cycle(), remove_nodes({"S1"}));
    const std::vector<std::set<std::string>> expected{{"R1"}, {"S2"}, {"R2"}, {"S3"}, {"R3"}};
    CHECK(t.rounds == expected);
    CHECK(t.surviving.empty());
    CHECK(is_total_failure(fixtures::six_cycle(), remove_nodes({"S1"})));
}

TEST_CASE("no removal leaves a fully cyclic network operating") {
    const NetworkSpec spec = fixtures::six_cycle();
    const auto op = operating_set(spec, RemovalSet::none());
    CHECK(op == std::set<std::string>{"R1", "R2", "R3", "S1", "S2", "S3"});
    CHECK(cascade_trace(spec, RemovalSet::none()).rounds.empty());
}

TEST_CASE("total failure checks") {
    CHECK(is_total_failure(fixtures::single_pair_bidir(), remove_nodes({"S1"})));
    CHECK_FALSE(is_total_failure(to_bidirectional(fixtures::six_cycle()), remove_nodes({"S1"})));
    CHECK(cascade_trace(to_bidirectional(fixtures::six_cycle()), remove_nodes({"S1"})).rounds.empty());
}

TEST_CASE("edge-variant removals delete dependency arcs") {
    const NetworkSpec spec = fixtures::six_cycle();
    const RemovalSet cut = RemovalSet::of_edges({{"S1", "R1"}});
    CHECK(is_total_failure(spec, cut));
    const CascadeTrace t = cascade_trace(spec, cut);
    CHECK(t.rounds.front() == std::set<std::string>{"R1"});

    // pairwise semantics: removing one pair of a bidirectional network
    // removes both arcs
    const NetworkSpec pair = fixtures::single_pair_bidir();
    CHECK(is_total_failure(pair, RemovalSet::of_edges({{"S1", "R1"}})));
}

TEST_CASE("invalid removals are rejected") {
    const NetworkSpec spec = fixtures::six_cycle();
    CHECK_THROWS_AS(operating_set(spec, remove_nodes({"S9"})), Error);
    CHECK_THROWS_AS(operating_set(spec, remove_nodes({"G"})), Error);
    CHECK_THROWS_AS(operating_set(spec, RemovalSet::of_edges({{"S1", "R2"}})), Error);
}

TEST_CASE("impact fractions") {
    const NetworkSpec spec = fixtures::cascade_example();
    CHECK(impact(spec, remove_nodes({"S4"})).overall == 1.0);
    CHECK(impact(fixtures::six_cycle(), RemovalSet::none()).overall == 0.0);
    const Impact im = impact(fixtures::six_cycle(), remove_nodes({"S1"}));
    CHECK(im.overall == 1.0);
    CHECK(im.power == 1.0);
    CHECK(im.comm == 1.0);
}

TEST_CASE("a relay with no dependency in-arc fails in round one") {
    NetworkSpec spec = fixtures::star(2, 1, {{"S1", "R1"}, {"R1", "S1"}, {"S2", "R1"}});
    const CascadeTrace t = cascade_trace(spec, RemovalSet::none());
    REQUIRE(t.rounds.size() == 1);
    CHECK(t.rounds[0] == std::set<std::string>{"S2"});
    CHECK(t.surviving == std::set<std::string>{"R1", "S1"});
}

TEST_CASE("trace partitions the relays and rounds are disjoint") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const NetworkSpec spec = gen_cycle_sampled({6, 6, seed});
        Rng rng(seed * 7 + 1);
        std::set<std::string> removed;
        for (const auto& id : spec.relay_ids())
            if (rng.chance(1, 3)) removed.insert(id);
        const CascadeTrace t = cascade_trace(spec, RemovalSet::of_nodes(removed));
        std::set<std::string> seen = removed;
        size_t total = removed.size();
        for (const auto& round : t.rounds) {
            CHECK_FALSE(round.empty());
            for (const auto& id : round) CHECK(seen.insert(id).second);
            total += round.size();
        }
        for (const auto& id : t.surviving) CHECK(seen.insert(id).second);
        total += t.surviving.size();
        CHECK(total == spec.relay_count());
    }
}

TEST_CASE("operating set is a fixed point and independent of peeling order") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        const NetworkSpec spec = gen_cycle_sampled({5, 6, seed});
        Rng rng(seed + 100);
        std::set<std::string> removed;
        for (const auto& id : spec.relay_ids())
            if (rng.chance(1, 4)) removed.insert(id);
        const RemovalSet removal = RemovalSet::of_nodes(removed);
        const auto op = operating_set(spec, removal);

        // fixed point: removing everything outside the operating set changes nothing
        std::set<std::string> complement;
        for (const auto& id : spec.relay_ids())
            if (!op.count(id)) complement.insert(id);
        CHECK(operating_set(spec, RemovalSet::of_nodes(complement)) == op);

        CHECK(peel_one_at_a_time(spec, removal, seed) == op);
        CHECK(peel_one_at_a_time(spec, removal, seed + 999) == op);
    }
}

TEST_CASE("operating sets shrink as removals grow") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        const NetworkSpec spec = gen_cycle_sampled({5, 6, seed});
        Rng rng(seed + 55);
        std::set<std::string> smaller, larger;
        for (const auto& id : spec.relay_ids()) {
            if (rng.chance(1, 5)) smaller.insert(id);
            if (smaller.count(id) || rng.chance(1, 5)) larger.insert(id);
        }
        const auto op_small = operating_set(spec, RemovalSet::of_nodes(smaller));
        const auto op_large = operating_set(spec, RemovalSet::of_nodes(larger));
        CHECK(std::includes(op_small.begin(), op_small.end(), op_large.begin(), op_large.end()));
    }
}

TEST_CASE("survivors and cycles coincide in star mode") {
    // nonempty operating set <=> a directed cycle survives; all nodes of a
    // surviving cycle operate
    for (uint64_t seed = 0; seed < 15; ++seed) {
        const NetworkSpec spec = gen_cycle_sampled({5, 6, seed});
        Rng rng(seed + 12);
        std::set<std::string> removed;
        for (const auto& id : spec.relay_ids())
            if (rng.chance(1, 3)) removed.insert(id);
        const auto op = operating_set(spec, RemovalSet::of_nodes(removed));

        DepDigraph g = project_dependency_digraph(spec);
        DepDigraph survived;
        survived.side_of = g.side_of;
        for (const auto& id : g.nodes)
            if (op.count(id)) survived.nodes.push_back(id);
        for (const auto& arc : g.arcs)
            if (op.count(arc.first) && op.count(arc.second)) survived.arcs.push_back(arc);
        const CycleSet cycles = enumerate_cycles(survived, 10000);
        CHECK(op.empty() == cycles.cycles.empty());
        for (const auto& cycle : cycles.cycles)
            for (const auto& id : cycle) CHECK(op.count(id) == 1);
    }
}

TEST_CASE("cycles are stable components") {
    // removals disjoint from a cycle leave all its nodes operating
    const NetworkSpec spec = fixtures::six_cycle_with_dead_end();
    const auto op = operating_set(spec, remove_nodes({"S2"}));
    for (const std::string id : {"S1", "R1", "S3", "R2", "S4", "R3"}) CHECK(op.count(id) == 1);

    const NetworkSpec two = fixtures::two_disjoint_two_cycles();
    const auto op2 = operating_set(two, remove_nodes({"S1"}));
    CHECK(op2 == std::set<std::string>{"R2", "S2"});
}

TEST_CASE("bidirectional cascades stop after one round") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const NetworkSpec spec = to_bidirectional(gen_cycle_sampled({6, 6, seed}));
        Rng rng(seed + 7);
        std::set<std::string> removed;
        for (const auto& id : spec.relay_ids())
            if (rng.chance(1, 3)) removed.insert(id);
        const CascadeTrace t = cascade_trace(spec, RemovalSet::of_nodes(removed));
        CHECK(t.rounds.size() <= 1);
    }
}

TEST_CASE("impact is one exactly on total failure") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const NetworkSpec spec = gen_cycle_sampled({4, 6, seed});
        Rng rng(seed + 3);
        std::set<std::string> removed;
        for (const auto& id : spec.relay_ids())
            if (rng.chance(1, 2)) removed.insert(id);
        const RemovalSet removal = RemovalSet::of_nodes(removed);
        CHECK((impact(spec, removal).overall == 1.0) == is_total_failure(spec, removal));
    }
}
