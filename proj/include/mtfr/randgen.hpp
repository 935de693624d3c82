#ifndef MTFR_RANDGEN_HPP
#define MTFR_RANDGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mtfr/network.hpp"

namespace mtfr {

enum class StopRule { AllNodesHaveInArc };

/// Parameters for the cycle-sampled instance generator.
struct GenConfig {
    size_t n_per_side = 1;
    size_t max_cycle_len = 6; // even, >= 2
    uint64_t seed = 0;
    StopRule stop_rule = StopRule::AllNodesHaveInArc;
};

/// Builds a unidirectional star network with n substations (S1..Sn) and n
/// routers (R1..Rn) by repeatedly sampling an alternating directed cycle:
/// length L uniform over the even values in [2, min(max_cycle_len, 2n)],
/// L/2 distinct substations and L/2 distinct routers drawn uniformly.
/// Sampling stops once every relay has at least one dependency in-arc, so
/// every instance has Node-MTFR >= 1. Deterministic for a fixed seed.
///
/// sampled_cycles, when non-null, receives each drawn cycle in order
/// (duplicated arcs included).
NetworkSpec gen_cycle_sampled(const GenConfig& cfg,
                              std::vector<std::vector<std::string>>* sampled_cycles = nullptr);

/// The same topology with symmetrized dependency arcs and mode set to
/// BIDIRECTIONAL. Idempotent in effect.
NetworkSpec to_bidirectional(const NetworkSpec& spec);

} // namespace mtfr

#endif
