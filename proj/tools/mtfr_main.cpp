// Command-line front end: cascade simulation, cycle enumeration, MTFR
// solvers, instance generation, and the comparison experiments.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtfr/cascade.hpp"
#include "mtfr/cycles.hpp"
#include "mtfr/harness.hpp"
#include "mtfr/randgen.hpp"
#include "mtfr/solvers.hpp"

namespace {

using mtfr::Edge;
using mtfr::RemovalSet;
using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

RemovalSet parse_removals(const std::string& nodes_arg, const std::string& edges_arg) {
    if (!nodes_arg.empty() && !edges_arg.empty())
        throw mtfr::Error(mtfr::ErrorCode::InvalidRemoval,
                          "give either node removals or edge removals, not both");
    if (!edges_arg.empty()) {
        std::vector<Edge> arcs;
        for (const auto& token : split(edges_arg, ',')) {
            const auto pos = token.find('>');
            if (pos == std::string::npos || pos == 0 || pos + 1 == token.size())
                throw mtfr::Error(mtfr::ErrorCode::InvalidRemoval,
                                  "edge removal \"" + token + "\" is not of the form a>b");
            arcs.emplace_back(token.substr(0, pos), token.substr(pos + 1));
        }
        return RemovalSet::of_edges(std::move(arcs));
    }
    std::set<std::string> ids;
    for (const auto& token : split(nodes_arg, ',')) ids.insert(token);
    return RemovalSet::of_nodes(std::move(ids));
}

std::string id_set(const std::set<std::string>& ids) {
    std::string out = "{";
    bool first = true;
    for (const auto& id : ids) {
        if (!first) out += ',';
        out += id;
        first = false;
    }
    return out + "}";
}

json removal_json(const RemovalSet& removal) {
    json j;
    if (removal.variant == mtfr::RemovalVariant::Node) {
        j["variant"] = "node";
        j["nodes"] = removal.nodes;
    } else {
        j["variant"] = "edge";
        j["edges"] = json::array();
        for (const auto& [a, b] : removal.edges) j["edges"].push_back({a, b});
    }
    return j;
}

int cmd_cascade(const std::string& network, const std::string& remove_arg,
                const std::string& edges_arg, bool show_trace, bool as_json) {
    const mtfr::NetworkSpec spec = mtfr::load_network(network);
    const RemovalSet removals = parse_removals(remove_arg, edges_arg);
    const mtfr::CascadeTrace trace = mtfr::cascade_trace(spec, removals);
    const mtfr::Impact im = mtfr::impact(spec, removals);
    if (as_json) {
        json j;
        j["initial"] = removal_json(removals);
        j["rounds"] = json::array();
        for (const auto& round : trace.rounds) j["rounds"].push_back(round);
        j["surviving"] = trace.surviving;
        j["total_failure"] = trace.surviving.empty();
        j["impact"] = {{"overall", im.overall}, {"power", im.power}, {"comm", im.comm}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (show_trace) {
        for (size_t k = 0; k < trace.rounds.size(); ++k)
            std::cout << "round " << k + 1 << ": " << id_set(trace.rounds[k]) << "\n";
    }
    std::cout << "surviving: " << id_set(trace.surviving) << "\n";
    return 0;
}

int cmd_cycles(const std::string& network, size_t cap, bool list) {
    const mtfr::NetworkSpec spec = mtfr::load_network(network);
    const mtfr::DepDigraph g = mtfr::project_dependency_digraph(spec);
    const mtfr::CycleSet cs = mtfr::enumerate_cycles(g, cap);
    std::cout << cs.cycles.size() << "\n";
    if (cs.truncated)
        std::cerr << "warning: enumeration truncated at cap " << cap << "\n";
    if (list) {
        for (const auto& cycle : cs.cycles) {
            for (size_t i = 0; i < cycle.size(); ++i)
                std::cout << (i ? " " : "") << cycle[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_solve(const std::string& network, const std::string& method,
              const std::string& variant, uint64_t budget_nodes, double budget_secs,
              bool as_json) {
    const mtfr::NetworkSpec spec = mtfr::load_network(network);
    mtfr::Budget budget{budget_nodes, budget_secs};

    mtfr::SolveReport report;
    if (method == "exact") {
        report = mtfr::exact_node_mtfr(spec, budget);
    } else if (method == "edge-exact") {
        report = mtfr::exact_edge_mtfr(spec, budget);
    } else if (method == "greedy-cycle") {
        report = mtfr::greedy_cycle_hitting(spec);
    } else if (method == "greedy-degree") {
        report = mtfr::greedy_degree(spec);
    } else if (method == "vertex-cover") {
        report = mtfr::bidir_node_mtfr(spec);
    } else if (method == "edge-all") {
        report = mtfr::bidir_edge_mtfr(spec);
    } else if (method == "brute") {
        report = mtfr::brute_force_mtfr(spec, variant == "edge" ? mtfr::RemovalVariant::Edge
                                                                : mtfr::RemovalVariant::Node);
    } else {
        std::cerr << "unknown method " << method << "\n";
        return 2;
    }

    if (as_json) {
        json j;
        j["method"] = method;
        j["size"] = report.size;
        j["removal"] = removal_json(report.removal);
        j["optimal"] = report.optimal;
        j["verified_total_failure"] = report.verified_total_failure;
        j["stats"] = {{"cycles_considered", report.stats.cycles_considered},
                      {"branch_nodes", report.stats.branch_nodes},
                      {"runtime_ms", report.stats.runtime_ms}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "method: " << method << "\n";
    std::cout << "size: " << report.size << "\n";
    if (report.removal.variant == mtfr::RemovalVariant::Node) {
        std::cout << "removal: " << id_set(report.removal.nodes) << "\n";
    } else {
        std::cout << "removal: {";
        for (size_t i = 0; i < report.removal.edges.size(); ++i)
            std::cout << (i ? "," : "") << report.removal.edges[i].first << '>'
                      << report.removal.edges[i].second;
        std::cout << "}\n";
    }
    std::cout << "optimal: " << (report.optimal ? "true" : "false") << "\n";
    std::cout << "verified: " << (report.verified_total_failure ? "true" : "false") << "\n";
    std::cout << "cycles considered: " << report.stats.cycles_considered << "\n";
    std::cout << "branch nodes: " << report.stats.branch_nodes << "\n";
    std::cout << "runtime_ms: " << report.stats.runtime_ms << "\n";
    return 0;
}

int cmd_gen(size_t n, size_t max_cycle, uint64_t seed, const std::string& mode,
            const std::string& out_path) {
    mtfr::NetworkSpec spec = mtfr::gen_cycle_sampled({n, max_cycle, seed});
    if (mode == "bi") spec = mtfr::to_bidirectional(spec);
    mtfr::save_network(spec, out_path);
    std::cout << "wrote " << out_path << " (" << spec.relay_count() << " relays, "
              << spec.dep_edges.size() << " dependency arcs)\n";
    return 0;
}

std::vector<size_t> parse_sizes(const std::string& arg) {
    std::vector<size_t> sizes;
    const auto range = arg.find("..");
    if (range != std::string::npos) {
        const size_t lo = std::stoul(arg.substr(0, range));
        const size_t hi = std::stoul(arg.substr(range + 2));
        for (size_t n = lo; n <= hi; ++n) sizes.push_back(n);
    } else {
        for (const auto& token : split(arg, ',')) sizes.push_back(std::stoul(token));
    }
    if (sizes.empty())
        throw mtfr::Error(mtfr::ErrorCode::Schema, "empty size list \"" + arg + "\"");
    return sizes;
}

int cmd_experiment(const std::string& which, const std::string& sizes_arg, size_t trials,
                   uint64_t seed, const std::string& out_dir, size_t jobs) {
    const std::vector<size_t> sizes = parse_sizes(sizes_arg);
    std::filesystem::create_directories(out_dir);
    mtfr::HarnessOptions opts;
    opts.jobs = jobs;

    mtfr::ExperimentResult result;
    if (which == "fig6") {
        result = mtfr::run_heuristic_comparison(sizes, trials, seed, opts);
    } else {
        result = mtfr::run_model_comparison(sizes, trials, seed, opts);
    }
    const std::string base = (std::filesystem::path(out_dir) / which).string();
    mtfr::emit_csv(result, base + ".csv");
    mtfr::emit_plot(result, base + ".svg");

    for (const auto& a : result.aggregates) {
        std::cout << "N=" << a.n << " " << a.method << ": mean=" << a.mean
                  << " stddev=" << a.stddev << " (" << a.count << " trials)\n";
    }
    if (result.budget_exceeded_trials > 0)
        std::cout << "budget-exceeded trials excluded from aggregates: "
                  << result.budget_exceeded_trials << "\n";

    std::string detail;
    const bool ok = which == "fig6" ? mtfr::heuristic_trend_holds(result, &detail)
                                    : mtfr::model_trend_holds(result, &detail);
    if (!ok) {
        std::cerr << "trend assertion failed: " << detail << "\n";
        return 1;
    }
    std::cout << "trend holds\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interdependent power/communication network robustness toolkit"};
    app.require_subcommand(1);

    // cascade
    auto* cascade = app.add_subcommand("cascade", "Simulate a failure cascade to its fixed point");
    std::string network, remove_arg, edges_arg;
    bool show_trace = false, as_json = false;
    cascade->add_option("--network", network, "topology file")->required();
    cascade->add_option("--remove", remove_arg, "comma-separated relay ids to remove");
    cascade->add_option("--edges", edges_arg, "comma-separated dependency arcs a>b to remove");
    cascade->add_flag("--trace", show_trace, "print the round-by-round trace");
    cascade->add_flag("--json", as_json, "machine-readable output");

    // cycles
    auto* cycles = app.add_subcommand("cycles", "Enumerate elementary dependency cycles");
    std::string cyc_network;
    size_t cap = mtfr::kDefaultCycleCap;
    bool list = false;
    cycles->add_option("--network", cyc_network, "topology file")->required();
    cycles->add_option("--cap", cap, "enumeration cap");
    cycles->add_flag("--list", list, "print one cycle per line");

    // solve
    auto* solve = app.add_subcommand("solve", "Compute total-failure removals");
    std::string solve_network, method, variant = "node";
    uint64_t budget_nodes = 1'000'000;
    double budget_secs = 60.0;
    bool solve_json = false;
    solve->add_option("--network", solve_network, "topology file")->required();
    solve->add_option("--method", method,
                      "exact|greedy-cycle|greedy-degree|vertex-cover|edge-exact|edge-all|brute")
        ->required();
    solve->add_option("--variant", variant, "node|edge (brute force only)");
    solve->add_option("--budget-nodes", budget_nodes, "branch-and-bound node limit");
    solve->add_option("--budget-secs", budget_secs, "wall-clock limit in seconds");
    solve->add_flag("--json", solve_json, "machine-readable output");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random cycle-sampled instance");
    size_t gen_n = 5, gen_max_cycle = 6;
    uint64_t gen_seed = 0;
    std::string gen_mode = "uni", gen_out;
    gen->add_option("--n", gen_n, "relays per side")->required();
    gen->add_option("--max-cycle", gen_max_cycle, "largest sampled cycle length (even)");
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--mode", gen_mode, "uni|bi")->check(CLI::IsMember({"uni", "bi"}));
    gen->add_option("--out", gen_out, "output topology file")->required();

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a comparison study");
    std::string exp_which, exp_sizes = "4..10", exp_out_dir;
    size_t exp_trials = 100, exp_jobs = 1;
    uint64_t exp_seed = 1;
    experiment->add_option("which", exp_which, "fig6 (heuristics) or fig7 (models)")
        ->required()
        ->check(CLI::IsMember({"fig6", "fig7"}));
    experiment->add_option("--sizes", exp_sizes, "sizes, e.g. 4..10 or 4,6,8");
    experiment->add_option("--trials", exp_trials, "instances per size");
    experiment->add_option("--seed", exp_seed, "base seed");
    experiment->add_option("--out-dir", exp_out_dir, "output directory")->required();
    experiment->add_option("--jobs", exp_jobs, "parallel workers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cascade->parsed())
            return cmd_cascade(network, remove_arg, edges_arg, show_trace, as_json);
        if (cycles->parsed()) return cmd_cycles(cyc_network, cap, list);
        if (solve->parsed())
            return cmd_solve(solve_network, method, variant, budget_nodes, budget_secs,
                             solve_json);
        if (gen->parsed()) return cmd_gen(gen_n, gen_max_cycle, gen_seed, gen_mode, gen_out);
        if (experiment->parsed())
            return cmd_experiment(exp_which, exp_sizes, exp_trials, exp_seed, exp_out_dir,
                                  exp_jobs);
    } catch (const mtfr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
