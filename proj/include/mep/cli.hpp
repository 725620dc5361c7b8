// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mep/batch.hpp"
#include "mep/engine.hpp"
#include "mep/knapsack.hpp"

namespace mep {

// Exit statuses shared by the command entry points.
inline constexpr int kExitOk = 0;      // evolve: >= 1 success; verify: match
inline constexpr int kExitNoMatch = 1; // evolve: no success; verify: mismatch
inline constexpr int kExitError = 2;   // bad arguments, parse or I/O failure

// Everything cmd_evolve needs. The target is either a knapsack instance or
// a previously written table file; exactly one must be set.
struct ExperimentConfig {
    std::optional<KnapsackInstance> instance;
    std::optional<std::string> table_path;
    EvolutionParams params; // params.seed doubles as the batch base seed
    int runs = 100;
    int workers = 1;                    // <= 0: one per available core
    std::string out_prefix = "results"; // writes <prefix>.csv and <prefix>.json
    bool timestamp_header = false;      // prepend "# generated <UTC time>" to the CSV
};

// Published experiment presets, index 1..4: (n, k, population, genes,
// generations) = (4,5,20,10,51), (5,7,100,30,101), (6,10,500,50,101),
// (7,14,1000,100,201).
KnapsackInstance preset_instance(int index);
EvolutionParams preset_params(int index);

// Loads config.table_path or generates the table for config.instance;
// throws std::invalid_argument / std::runtime_error on bad configs.
TruthTable resolve_table(const ExperimentConfig& config);

// CSV report: fixed header line, then one row per run ordered by run id,
// netlist field quoted. Without a timestamp the bytes depend only on the
// stats, so equal configs produce byte-identical files.
std::string batch_csv(const BatchStats& stats,
                      const std::optional<std::string>& timestamp = std::nullopt);

// Aggregate summary as a JSON object string, the machine-readable
// counterpart of the console summary.
std::string batch_summary_json(const ExperimentConfig& config, const TruthTable& table,
                               const BatchStats& stats);

// Command entry points behind the mepcirc binary. Reports go to `out`,
// diagnostics to `err`; the return value is one of the exit statuses above.
// An out path of "-" streams the payload to `out` instead of a file.
int cmd_gen_table(int n, std::int64_t k, const std::string& out_path, std::ostream& out,
                  std::ostream& err);
int cmd_evolve(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& netlist_path, const std::string& table_path,
               std::ostream& out, std::ostream& err);
int cmd_export(const std::string& netlist_path, const std::string& format,
               const std::string& out_path, std::ostream& out, std::ostream& err);

} // namespace mep
