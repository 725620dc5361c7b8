// SPDX-License-Identifier: MIT
#include "mep/cli.hpp"

#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>

#include "mep/circuit.hpp"

namespace mep {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(fmt::format("{}: cannot open", path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(fmt::format("{}: cannot open for writing", path));
    out << text;
    if (!out)
        throw std::runtime_error(fmt::format("{}: write failed", path));
}

std::string csv_quote(const std::string& field) {
    std::string quoted = "\"";
    for (const char ch : field) {
        quoted += ch;
        if (ch == '"')
            quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string utc_timestamp_now() {
    const std::time_t now = std::time(nullptr);
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

} // namespace

KnapsackInstance preset_instance(int index) {
    switch (index) {
    case 1: return {4, 5};
    case 2: return {5, 7};
    case 3: return {6, 10};
    case 4: return {7, 14};
    default: throw std::out_of_range("preset index must be 1..4");
    }
}

EvolutionParams preset_params(int index) {
    EvolutionParams params; // crossover 0.9, 5 mutations, p_function 0.5
    switch (index) {
    case 1: params.population_size = 20;   params.chromosome_length = 10;  params.generations = 51;  break;
    case 2: params.population_size = 100;  params.chromosome_length = 30;  params.generations = 101; break;
    case 3: params.population_size = 500;  params.chromosome_length = 50;  params.generations = 101; break;
    case 4: params.population_size = 1000; params.chromosome_length = 100; params.generations = 201; break;
    default: throw std::out_of_range("preset index must be 1..4");
    }
    return params;
}

TruthTable resolve_table(const ExperimentConfig& config) {
    if (config.instance && config.table_path)
        throw std::invalid_argument("give either a knapsack instance or a table file, not both");
    if (config.table_path)
        return load_table(*config.table_path);
    if (!config.instance)
        throw std::invalid_argument("no target: set a knapsack instance or a table file");
    if (!config.instance->ok())
        throw std::invalid_argument(
            fmt::format("invalid instance n={} k={}: need 1 <= n <= {} and k >= 0",
                        config.instance->n, config.instance->k, kMaxInputs));
    return generate_truth_table(*config.instance);
}

std::string batch_csv(const BatchStats& stats, const std::optional<std::string>& timestamp) {
    std::string csv;
    if (timestamp)
        csv += fmt::format("# generated {}\n", *timestamp);
    csv += "run_id,seed,success,best_fitness,first_hit_generation,best_gene,gate_count,netlist\n";
    for (const RunRecord& rec : stats.records) {
        csv += fmt::format(
            "{},{},{},{},{},{},{},{}\n", rec.run_id, rec.seed, rec.success ? 1 : 0,
            rec.best_fitness,
            rec.first_hit_generation ? fmt::format("{}", *rec.first_hit_generation) : "",
            rec.best_gene, rec.gate_count ? fmt::format("{}", *rec.gate_count) : "",
            csv_quote(rec.netlist_text));
    }
    return csv;
}

std::string batch_summary_json(const ExperimentConfig& config, const TruthTable& table,
                               const BatchStats& stats) {
    using json = nlohmann::ordered_json;
    json j;

    json target;
    if (config.table_path) {
        target["kind"] = "table";
        target["path"] = *config.table_path;
    } else {
        target["kind"] = "knapsack";
        target["n_numbers"] = config.instance->n;
        target["target_sum"] = config.instance->k;
    }
    target["inputs"] = table.n;
    target["cases"] = std::uint64_t{1} << table.n;
    target["label"] = table.label;
    j["target"] = std::move(target);

    const EvolutionParams& p = config.params;
    j["params"] = {{"population_size", p.population_size},
                   {"chromosome_length", p.chromosome_length},
                   {"generations", p.generations},
                   {"crossover_probability", p.crossover_probability},
                   {"mutations_per_chromosome", p.mutations_per_chromosome},
                   {"p_function", p.p_function},
                   {"stop_on_success", p.stop_on_success},
                   {"probabilistic_mutation", p.probabilistic_mutation}};
    j["runs"] = stats.runs;
    j["base_seed"] = p.seed;
    j["results"] = {
        {"successes", stats.successes},
        {"success_rate", stats.runs > 0 ? static_cast<double>(stats.successes) / stats.runs : 0.0},
        {"min_gates", stats.min_gates ? json(*stats.min_gates) : json(nullptr)},
        {"median_gates", stats.median_gates ? json(*stats.median_gates) : json(nullptr)},
        {"max_gates", stats.max_gates ? json(*stats.max_gates) : json(nullptr)},
        {"mean_first_hit_generation", stats.mean_first_hit_generation
                                          ? json(*stats.mean_first_hit_generation)
                                          : json(nullptr)}};
    return j.dump(2) + "\n";
}

int cmd_gen_table(int n, std::int64_t k, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    const KnapsackInstance inst{n, k};
    if (!inst.ok()) {
        err << fmt::format("error: invalid instance n={} k={}: need 1 <= n <= {} and k >= 0\n",
                           n, k, kMaxInputs);
        return kExitError;
    }
    try {
        const TruthTable table = generate_truth_table(inst);
        if (inst.constant_table())
            err << fmt::format("note: sum {} is not reachable from {{1..{}}}; table is constant\n",
                               k, n);
        if (out_path == "-") {
            out << format_table(table);
        } else {
            save_table(table, out_path);
            out << fmt::format("wrote {}: {} cases, {} positive\n", out_path,
                               std::uint64_t{1} << table.n, table.outputs.count_ones());
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_evolve(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.runs < 1) {
            err << "error: --runs must be >= 1\n";
            return kExitError;
        }
        if (!config.params.ok()) {
            err << "error: invalid parameters (need pop >= 2, genes >= 1, generations >= 1, "
                   "probabilities in [0,1], mutations >= 0)\n";
            return kExitError;
        }
        const TruthTable table = resolve_table(config);
        const PrimitiveSet pset = gate_set(table.n);
        const BatchStats stats = run_batch(config.params, pset, table, config.runs,
                                           config.params.seed, config.workers);

        std::optional<std::string> timestamp;
        if (config.timestamp_header)
            timestamp = utc_timestamp_now();
        const std::string csv_path = config.out_prefix + ".csv";
        const std::string json_path = config.out_prefix + ".json";
        write_file(csv_path, batch_csv(stats, timestamp));
        write_file(json_path, batch_summary_json(config, table, stats));

        out << fmt::format("target: {} ({} cases)\n", table.label, std::uint64_t{1} << table.n);
        out << fmt::format("runs: {}, base seed {}, workers {}\n", stats.runs,
                           config.params.seed,
                           config.workers <= 0 ? std::string("auto")
                                               : fmt::format("{}", config.workers));
        out << fmt::format("successes: {}/{}\n", stats.successes, stats.runs);
        if (stats.min_gates)
            out << fmt::format("smallest perfect circuit: {} gates (median {}, max {})\n",
                               *stats.min_gates, *stats.median_gates, *stats.max_gates);
        if (stats.mean_first_hit_generation)
            out << fmt::format("mean first-hit generation: {}\n",
                               *stats.mean_first_hit_generation);
        out << fmt::format("wrote {} and {}\n", csv_path, json_path);
        return stats.successes > 0 ? kExitOk : kExitNoMatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_verify(const std::string& netlist_path, const std::string& table_path,
               std::ostream& out, std::ostream& err) {
    Netlist nl;
    try {
        nl = parse_netlist(read_file(netlist_path));
    } catch (const std::exception& e) {
        err << fmt::format("error: {}: {}\n", netlist_path, e.what());
        return kExitError;
    }
    TruthTable table;
    try {
        table = load_table(table_path);
    } catch (const std::exception& e) {
        err << fmt::format("error: {}: {}\n", table_path, e.what());
        return kExitError;
    }
    if (nl.inputs > table.n) {
        err << fmt::format("error: netlist reads {} inputs but the table has {}\n", nl.inputs,
                           table.n);
        return kExitError;
    }
    const std::vector<std::uint64_t> bad = mismatching_cases(nl, table);
    if (bad.empty()) {
        out << "PASS\n";
        return kExitOk;
    }
    out << fmt::format("FAIL: {} of {} cases differ\n", bad.size(), std::uint64_t{1} << table.n);
    constexpr std::size_t kMaxListed = 32;
    for (std::size_t i = 0; i < bad.size() && i < kMaxListed; ++i) {
        const bool expected = table.outputs.bit(bad[i]);
        out << fmt::format("case {}: expected {}, got {}\n", bad[i], expected ? 1 : 0,
                           expected ? 0 : 1);
    }
    if (bad.size() > kMaxListed)
        out << fmt::format("(+ {} more)\n", bad.size() - kMaxListed);
    return kExitNoMatch;
}

int cmd_export(const std::string& netlist_path, const std::string& format,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    Netlist nl;
    try {
        nl = parse_netlist(read_file(netlist_path));
    } catch (const std::exception& e) {
        err << fmt::format("error: {}: {}\n", netlist_path, e.what());
        return kExitError;
    }
    std::string text;
    if (format == "dot") {
        text = export_dot(nl);
    } else if (format == "text") {
        text = format_netlist(nl);
    } else {
        err << fmt::format("error: unknown format '{}' (use dot or text)\n", format);
        return kExitError;
    }
    try {
        if (out_path.empty() || out_path == "-") {
            out << text;
        } else {
            write_file(out_path, text);
            out << fmt::format("wrote {}\n", out_path);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace mep
