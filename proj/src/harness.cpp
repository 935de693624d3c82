#include "mtfr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "mtfr/randgen.hpp"
#include "mtfr/rng.hpp"

namespace mtfr {

namespace {

struct Task {
    size_t n;
    size_t trial;
    uint64_t seed;
};

// Runs one solver batch per task, in parallel when jobs > 1. Results land in
// per-task slots, so output order does not depend on scheduling.
template <typename Fn>
std::vector<std::vector<ExperimentRow>> run_tasks(const std::vector<Task>& tasks, size_t jobs,
                                                  Fn&& solve_one) {
    std::vector<std::vector<ExperimentRow>> slots(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) slots[i] = solve_one(tasks[i]);
        return slots;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    const size_t threads = std::min(jobs, tasks.size());
    workers.reserve(threads);
    for (size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                slots[i] = solve_one(tasks[i]);
            }
        });
    }
    for (auto& w : workers) w.join();
    return slots;
}

std::vector<Task> make_tasks(const std::vector<size_t>& sizes, size_t trials,
                             uint64_t base_seed) {
    std::vector<Task> tasks;
    tasks.reserve(sizes.size() * trials);
    for (size_t n : sizes)
        for (size_t trial = 0; trial < trials; ++trial)
            tasks.push_back({n, trial, derive_seed(base_seed, n, trial)});
    return tasks;
}

ExperimentRow make_row(const Task& task, const std::string& method, const SolveReport& report) {
    return {task.n, task.trial, task.seed, method, report.size, report.optimal,
            report.stats.runtime_ms};
}

ExperimentResult collect(const std::vector<std::vector<ExperimentRow>>& slots) {
    ExperimentResult result;
    for (const auto& rows : slots)
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    result.aggregates = aggregate_rows(result.rows, &result.budget_exceeded_trials);
    return result;
}

} // namespace

ExperimentResult run_heuristic_comparison(const std::vector<size_t>& sizes, size_t trials,
                                          uint64_t base_seed, const HarnessOptions& opts) {
    const std::vector<Task> tasks = make_tasks(sizes, trials, base_seed);
    auto slots = run_tasks(tasks, opts.jobs, [&](const Task& task) {
        const NetworkSpec spec = gen_cycle_sampled({task.n, 6, task.seed});
        const SolveReport exact = exact_node_mtfr(spec, opts.budget);
        const SolveReport cycle = greedy_cycle_hitting(spec);
        const SolveReport degree = greedy_degree(spec);
        return std::vector<ExperimentRow>{make_row(task, "exact", exact),
                                          make_row(task, "greedy-cycle", cycle),
                                          make_row(task, "greedy-degree", degree)};
    });
    return collect(slots);
}

ExperimentResult run_model_comparison(const std::vector<size_t>& sizes, size_t trials,
                                      uint64_t base_seed, const HarnessOptions& opts) {
    const std::vector<Task> tasks = make_tasks(sizes, trials, base_seed);
    auto slots = run_tasks(tasks, opts.jobs, [&](const Task& task) {
        const NetworkSpec spec = gen_cycle_sampled({task.n, 6, task.seed});
        const SolveReport uni = exact_node_mtfr(spec, opts.budget);
        const SolveReport bidir = bidir_node_mtfr(to_bidirectional(spec));
        // provable bound: a vertex cover hits every arc, hence every cycle
        // of the unidirectional digraph
        if (uni.optimal && uni.size > bidir.size)
            throw std::logic_error("unidirectional MTFR exceeded the bidirectional cover");
        return std::vector<ExperimentRow>{make_row(task, "exact", uni),
                                          make_row(task, "vertex-cover", bidir)};
    });
    return collect(slots);
}

std::vector<Aggregate> aggregate_rows(const std::vector<ExperimentRow>& rows,
                                      size_t* budget_exceeded_trials) {
    // trials where some solve blew its budget are excluded from aggregates
    std::map<std::pair<size_t, size_t>, bool> trial_ok;
    for (const auto& row : rows) {
        auto key = std::make_pair(row.n, row.trial);
        if (!trial_ok.count(key)) trial_ok[key] = true;
        if (row.method == "exact" && !row.optimal) trial_ok[key] = false;
    }
    size_t excluded = 0;
    for (const auto& [key, ok] : trial_ok)
        if (!ok) ++excluded;
    if (budget_exceeded_trials) *budget_exceeded_trials = excluded;

    std::map<std::pair<size_t, std::string>, std::vector<size_t>> groups;
    std::vector<std::pair<size_t, std::string>> order;
    for (const auto& row : rows) {
        if (!trial_ok[{row.n, row.trial}]) continue;
        auto key = std::make_pair(row.n, row.method);
        if (!groups.count(key)) order.push_back(key);
        groups[key].push_back(row.size);
    }
    std::sort(order.begin(), order.end());

    std::vector<Aggregate> aggregates;
    for (const auto& key : order) {
        const auto& sizes = groups[key];
        Aggregate a;
        a.n = key.first;
        a.method = key.second;
        a.count = sizes.size();
        for (size_t s : sizes) a.size_sum += s;
        a.mean = static_cast<double>(a.size_sum) / static_cast<double>(a.count);
        double ss = 0.0;
        for (size_t s : sizes) {
            const double d = static_cast<double>(s) - a.mean;
            ss += d * d;
        }
        a.stddev = a.count > 1 ? std::sqrt(ss / static_cast<double>(a.count - 1)) : 0.0;
        aggregates.push_back(std::move(a));
    }
    return aggregates;
}

void emit_csv(const ExperimentResult& result, const std::string& path) {
    if (result.rows.empty())
        throw Error(ErrorCode::EmptyResult, "no rows to write to " + path);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    out << "N,trial,seed,method,size,optimal,runtime_ms\n";
    char buf[32];
    for (const auto& row : result.rows) {
        std::snprintf(buf, sizeof buf, "%.3f", row.runtime_ms);
        out << row.n << ',' << row.trial << ',' << row.seed << ',' << row.method << ','
            << row.size << ',' << (row.optimal ? "true" : "false") << ',' << buf << '\n';
    }
    if (!out)
        throw Error(ErrorCode::Io, "write to " + path + " failed");
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

void emit_plot(const ExperimentResult& result, const std::string& path) {
    if (result.rows.empty())
        throw Error(ErrorCode::EmptyResult, "no rows to plot to " + path);

    std::vector<std::string> methods;
    std::vector<size_t> ns;
    double y_max = 1.0;
    for (const auto& a : result.aggregates) {
        if (std::find(methods.begin(), methods.end(), a.method) == methods.end())
            methods.push_back(a.method);
        if (std::find(ns.begin(), ns.end(), a.n) == ns.end()) ns.push_back(a.n);
        y_max = std::max(y_max, a.mean + a.stddev);
    }
    std::sort(ns.begin(), ns.end());
    std::sort(methods.begin(), methods.end());

    const double width = 640, height = 480;
    const double ml = 56, mr = 16, mt = 24, mb = 44;
    const double x_lo = static_cast<double>(ns.front());
    const double x_hi = static_cast<double>(ns.back());
    const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;
    y_max *= 1.05;
    auto sx = [&](double n) { return ml + (n - x_lo) / x_span * (width - ml - mr); };
    auto sy = [&](double v) { return height - mb - v / y_max * (height - mt - mb); };

    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(height - mb) << "\" x2=\""
        << fmt(width - mr) << "\" y2=\"" << fmt(height - mb)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(ml)
        << "\" y2=\"" << fmt(height - mb) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (size_t n : ns) {
        svg << "<text x=\"" << fmt(sx(static_cast<double>(n))) << "\" y=\""
            << fmt(height - mb + 18) << "\" font-size=\"12\" text-anchor=\"middle\">" << n
            << "</text>\n";
    }
    const int y_ticks = 5;
    for (int t = 0; t <= y_ticks; ++t) {
        const double v = y_max * t / y_ticks;
        svg << "<text x=\"" << fmt(ml - 6) << "\" y=\"" << fmt(sy(v) + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
    }
    svg << "<text x=\"" << fmt((ml + width - mr) / 2) << "\" y=\"" << fmt(height - 8)
        << "\" font-size=\"13\" text-anchor=\"middle\">nodes per side</text>\n";
    svg << "<text x=\"14\" y=\"" << fmt((mt + height - mb) / 2)
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << fmt((mt + height - mb) / 2) << ")\">mean removal size</text>\n";

    for (size_t mi = 0; mi < methods.size(); ++mi) {
        const char* color = kColors[mi % (sizeof kColors / sizeof kColors[0])];
        std::ostringstream points;
        for (const auto& a : result.aggregates) {
            if (a.method != methods[mi]) continue;
            const double x = sx(static_cast<double>(a.n));
            points << fmt(x) << ',' << fmt(sy(a.mean)) << ' ';
            // one-standard-deviation error bar
            svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(sy(std::max(0.0, a.mean - a.stddev)))
                << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(sy(a.mean + a.stddev))
                << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
        }
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\""
            << points.str() << "\"/>\n";
        svg << "<text x=\"" << fmt(ml + 12) << "\" y=\"" << fmt(mt + 16 + 16 * static_cast<double>(mi))
            << "\" font-size=\"13\" fill=\"" << color << "\">" << methods[mi] << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    out << svg.str();
    if (!out)
        throw Error(ErrorCode::Io, "write to " + path + " failed");
}

namespace {

const Aggregate* find_aggregate(const ExperimentResult& result, size_t n,
                                const std::string& method) {
    for (const auto& a : result.aggregates)
        if (a.n == n && a.method == method) return &a;
    return nullptr;
}

std::vector<size_t> aggregate_ns(const ExperimentResult& result) {
    std::vector<size_t> ns;
    for (const auto& a : result.aggregates)
        if (std::find(ns.begin(), ns.end(), a.n) == ns.end()) ns.push_back(a.n);
    std::sort(ns.begin(), ns.end());
    return ns;
}

} // namespace

bool heuristic_trend_holds(const ExperimentResult& result, std::string* detail) {
    for (size_t n : aggregate_ns(result)) {
        const Aggregate* exact = find_aggregate(result, n, "exact");
        const Aggregate* cycle = find_aggregate(result, n, "greedy-cycle");
        const Aggregate* degree = find_aggregate(result, n, "greedy-degree");
        if (!exact || !cycle || !degree) continue;
        if (exact->size_sum > cycle->size_sum || cycle->size_sum > degree->size_sum) {
            if (detail) {
                std::ostringstream os;
                os << "N=" << n << ": mean exact=" << fmt(exact->mean)
                   << " greedy-cycle=" << fmt(cycle->mean)
                   << " greedy-degree=" << fmt(degree->mean);
                *detail = os.str();
            }
            return false;
        }
    }
    return true;
}

bool model_trend_holds(const ExperimentResult& result, std::string* detail) {
    for (size_t n : aggregate_ns(result)) {
        const Aggregate* uni = find_aggregate(result, n, "exact");
        const Aggregate* bidir = find_aggregate(result, n, "vertex-cover");
        if (!uni || !bidir) continue;
        if (bidir->size_sum <= uni->size_sum) {
            if (detail) {
                std::ostringstream os;
                os << "N=" << n << ": mean unidirectional=" << fmt(uni->mean)
                   << " bidirectional=" << fmt(bidir->mean);
                *detail = os.str();
            }
            return false;
        }
    }
    return true;
}

} // namespace mtfr
