#ifndef MTFR_HARNESS_HPP
#define MTFR_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mtfr/solvers.hpp"

namespace mtfr {

struct ExperimentRow {
    size_t n = 0;
    size_t trial = 0;
    uint64_t seed = 0;
    std::string method;
    size_t size = 0;
    bool optimal = false;
    double runtime_ms = 0.0;
};

struct Aggregate {
    size_t n = 0;
    std::string method;
    size_t count = 0;      // rows contributing to mean/stddev
    uint64_t size_sum = 0; // exact mean comparisons use the integer sum
    double mean = 0.0;
    double stddev = 0.0;   // sample standard deviation
};

/// Rows are ordered by (N, trial, method); aggregates by (N, method).
/// Trials whose exact solve ran out of budget are excluded from the
/// aggregates and counted in budget_exceeded_trials.
struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    std::vector<Aggregate> aggregates;
    size_t budget_exceeded_trials = 0;
};

struct HarnessOptions {
    size_t jobs = 1;
    Budget budget; // per exact solve
};

/// One unidirectional instance per (N, trial) with seed
/// derive_seed(base_seed, N, trial); methods exact, greedy-cycle and
/// greedy-degree. Fully deterministic apart from the runtime columns.
ExperimentResult run_heuristic_comparison(const std::vector<size_t>& sizes, size_t trials,
                                          uint64_t base_seed, const HarnessOptions& opts = {});

/// Same instances; methods exact (unidirectional Node-MTFR) and
/// vertex-cover (on the bidirectional conversion of the same topology).
/// Per row the unidirectional size never exceeds the bidirectional one.
ExperimentResult run_model_comparison(const std::vector<size_t>& sizes, size_t trials,
                                      uint64_t base_seed, const HarnessOptions& opts = {});

/// Recomputes the per-(N, method) aggregates from the rows.
std::vector<Aggregate> aggregate_rows(const std::vector<ExperimentRow>& rows,
                                      size_t* budget_exceeded_trials = nullptr);

/// CSV with columns exactly: N, trial, seed, method, size, optimal,
/// runtime_ms. Throws EMPTY_RESULT on an empty result and IO with path
/// context on write failures.
void emit_csv(const ExperimentResult& result, const std::string& path);

/// SVG line chart of mean removal size vs N, one polyline per method, error
/// bars at one standard deviation.
void emit_plot(const ExperimentResult& result, const std::string& path);

/// Mean size orderings asserted by the experiment commands. Comparisons on
/// integer sums, ties allowed where noted.
bool heuristic_trend_holds(const ExperimentResult& result, std::string* detail = nullptr);
bool model_trend_holds(const ExperimentResult& result, std::string* detail = nullptr);

} // namespace mtfr

#endif
