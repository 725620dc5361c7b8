// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mep/circuit.hpp"
#include "mep/engine.hpp"

namespace mep {

// One row of a batch report: the run outcome plus the circuit extracted from
// the best perfect gene (absent when the run failed).
struct RunRecord {
    int run_id = 0;
    std::uint64_t seed = 0;
    bool success = false;
    double best_fitness = 0.0;
    std::optional<int> first_hit_generation;
    int best_gene = 0;
    std::optional<int> gate_count; // smallest perfect circuit, successes only
    std::string netlist_text;      // inline netlist form, empty on failure
};

// Aggregate over a batch; gate and first-hit statistics cover the successful
// runs only and are absent when there were none.
struct BatchStats {
    int runs = 0;
    int successes = 0;
    std::optional<int> min_gates;
    std::optional<double> median_gates;
    std::optional<int> max_gates;
    std::optional<double> mean_first_hit_generation;
    std::vector<RunRecord> records; // ordered by run_id
};

// n_runs independent evolutions with seeds base_seed, base_seed+1, ...
// Runs may execute on concurrent workers (workers <= 0 picks one per
// available core), but records are keyed by run id, so the result is
// deterministic for fixed (params, base_seed) regardless of worker count.
BatchStats run_batch(const EvolutionParams& params, const PrimitiveSet& pset,
                     const TruthTable& target, int n_runs, std::uint64_t base_seed,
                     int workers = 1);

} // namespace mep
