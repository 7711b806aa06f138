#pragma once

#include "gradla/oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gradla {

struct SweepConfig {
    std::uint64_t seed = 1;
    // random instances per property (per algebra where a suite loops over several)
    long instances = 200;
    // random orderings tried per instance in the ordering suite
    int orderings = 100;
};

// sigma_independence, multiplicativity, ordering, gdet_sigma_laws, permutation, crossed,
// dieudonne, berezinian, trace, row_decomposition
const std::vector<std::string>& sweep_suites();

// Runs one suite ("all" runs every suite). Deterministic for a fixed config.
std::vector<SweepReport> run_property_sweeps(const std::string& suite, const SweepConfig& config);

// Observation only: for homogeneous even x != 0, how many distinct values Gber(X, sigma) takes
// over all sigma, summed over random instances. Nothing is asserted about it.
struct GberSigmaObservation {
    long instances = 0, sigma_dependent = 0;
};
GberSigmaObservation observe_gber_sigma_dependence(std::uint64_t seed, long instances);

} // namespace gradla
