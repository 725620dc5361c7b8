// SPDX-License-Identifier: MIT
#include "mep/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mep {

namespace {

RunRecord execute_one(int run_id, const EvolutionParams& base, const PrimitiveSet& pset,
                      const TruthTable& target, std::uint64_t base_seed) {
    EvolutionParams params = base;
    params.seed = base_seed + static_cast<std::uint64_t>(run_id);

    TruthTableObjective objective(target);
    const RunResult result = steady_state_run(params, pset, objective);

    RunRecord rec;
    rec.run_id = run_id;
    rec.seed = params.seed;
    rec.success = result.success;
    rec.best_fitness = result.best_fitness;
    rec.first_hit_generation = result.first_hit_generation;
    rec.best_gene = result.best_gene;
    if (result.success) {
        const auto netlist =
            shortest_perfect_circuit(result.best_individual.chromosome, target);
        if (netlist) {
            rec.gate_count = gate_count(*netlist);
            rec.netlist_text = format_netlist_inline(*netlist);
        }
    }
    return rec;
}

void aggregate(BatchStats& stats) {
    std::vector<int> gates;
    double first_hit_sum = 0.0;
    int first_hit_count = 0;
    for (const RunRecord& rec : stats.records) {
        if (!rec.success)
            continue;
        ++stats.successes;
        if (rec.gate_count)
            gates.push_back(*rec.gate_count);
        if (rec.first_hit_generation) {
            first_hit_sum += *rec.first_hit_generation;
            ++first_hit_count;
        }
    }
    if (!gates.empty()) {
        std::sort(gates.begin(), gates.end());
        stats.min_gates = gates.front();
        stats.max_gates = gates.back();
        const std::size_t mid = gates.size() / 2;
        stats.median_gates = gates.size() % 2 == 1
                                 ? static_cast<double>(gates[mid])
                                 : (gates[mid - 1] + gates[mid]) / 2.0;
    }
    if (first_hit_count > 0)
        stats.mean_first_hit_generation = first_hit_sum / first_hit_count;
}

} // namespace

BatchStats run_batch(const EvolutionParams& params, const PrimitiveSet& pset,
                     const TruthTable& target, int n_runs, std::uint64_t base_seed,
                     int workers) {
    if (n_runs < 1)
        throw std::invalid_argument("run_batch: n_runs must be >= 1");
    if (!params.ok())
        throw std::invalid_argument("run_batch: bad parameters");
    if (!pset.ok())
        throw std::invalid_argument("run_batch: bad primitive set");
    if (pset.num_terminals != target.n)
        throw std::invalid_argument("run_batch: terminal count differs from table inputs");

    BatchStats stats;
    stats.runs = n_runs;
    stats.records.resize(static_cast<std::size_t>(n_runs));

    int worker_count = workers;
    if (worker_count <= 0)
        worker_count = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    worker_count = std::min(worker_count, n_runs);

    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    const auto work = [&] {
        for (;;) {
            const int id = next.fetch_add(1);
            if (id >= n_runs)
                return;
            try {
                stats.records[static_cast<std::size_t>(id)] =
                    execute_one(id, params, pset, target, base_seed);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };

    if (worker_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    aggregate(stats);
    return stats;
}

} // namespace mep
