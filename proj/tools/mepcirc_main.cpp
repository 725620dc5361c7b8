// SPDX-License-Identifier: MIT
//
// mepcirc — evolves gate-level circuits for subset-sum decision tables.
//
// Subcommands: gen-table, evolve, verify, export. Run with --help for the
// full flag reference; see README.md for the file formats.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mep/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Evolves gate-level digital circuits that decide subset-sum "
                 "(knapsack) truth tables with a linear genetic-programming engine."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mepcirc 0.1.0");
    app.set_config("--config", "", "Read options from a TOML/INI config file");

    // gen-table
    int gen_n = 0;
    std::int64_t gen_sum = 0;
    std::string gen_out = "-";
    CLI::App* gen = app.add_subcommand("gen-table", "Write the truth table of a knapsack instance");
    gen->add_option("--n", gen_n, "Size of the base set {1..n}")->required();
    gen->add_option("--sum", gen_sum, "Target sum")->required();
    gen->add_option("--out", gen_out, "Output path ('-' for stdout)")->capture_default_str();

    // evolve
    mep::ExperimentConfig cfg;
    cfg.workers = 0; // CLI default: one worker per core
    int evolve_n = 0;
    std::int64_t evolve_sum = 0;
    std::string evolve_table;
    int paper_instance = 0;
    CLI::App* evolve = app.add_subcommand("evolve", "Run a batch of seeded evolution runs");
    evolve->add_option("--n", evolve_n, "Size of the base set {1..n}");
    evolve->add_option("--sum", evolve_sum, "Target sum");
    evolve->add_option("--table", evolve_table, "Target truth-table file (instead of --n/--sum)");
    evolve->add_option("--paper-instance", paper_instance,
                       "Published instance preset 1..4; fills n, sum, pop, genes, "
                       "generations unless given explicitly")
        ->check(CLI::Range(1, 4));
    evolve->add_option("--pop", cfg.params.population_size, "Population size")
        ->capture_default_str();
    evolve->add_option("--genes", cfg.params.chromosome_length, "Chromosome length")
        ->capture_default_str();
    evolve->add_option("--generations", cfg.params.generations, "Generations per run")
        ->capture_default_str();
    evolve->add_option("--runs", cfg.runs, "Independent runs")->capture_default_str();
    evolve->add_option("--seed", cfg.params.seed, "Base seed; run r uses seed + r")
        ->capture_default_str();
    evolve->add_option("--crossover-prob", cfg.params.crossover_probability,
                       "Crossover probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    evolve->add_option("--mutations", cfg.params.mutations_per_chromosome,
                       "Mutation events per offspring")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    evolve->add_option("--p-function", cfg.params.p_function,
                       "Probability that a random gene is a gate")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    evolve->add_flag("--stop-on-success,!--run-full", cfg.params.stop_on_success,
                     "Stop a run once fitness 0 is reached (--run-full to disable)");
    evolve->add_flag("--probabilistic-mutation", cfg.params.probabilistic_mutation,
                     "Per-slot mutation rate with the same expected event count");
    evolve->add_option("--workers", cfg.workers, "Concurrent runs (0 = one per core)")
        ->capture_default_str();
    evolve->add_option("--out", cfg.out_prefix, "Output prefix for <prefix>.csv/.json")
        ->capture_default_str();
    evolve->add_flag("--timestamp", cfg.timestamp_header,
                     "Prepend a '# generated <UTC time>' line to the CSV");

    // verify
    std::string verify_netlist;
    std::string verify_table;
    CLI::App* verify = app.add_subcommand("verify", "Check a netlist file against a table file");
    verify->add_option("--netlist", verify_netlist, "Netlist file")->required();
    verify->add_option("--table", verify_table, "Truth-table file")->required();

    // export
    std::string export_netlist;
    std::string export_format = "dot";
    std::string export_out = "-";
    CLI::App* exp = app.add_subcommand("export", "Render a netlist file as DOT or text");
    exp->add_option("--netlist", export_netlist, "Netlist file")->required();
    exp->add_option("--format", export_format, "Output format")
        ->check(CLI::IsMember({"dot", "text"}))
        ->capture_default_str();
    exp->add_option("--out", export_out, "Output path ('-' for stdout)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : mep::kExitError;
    }

    if (app.got_subcommand(gen))
        return mep::cmd_gen_table(gen_n, gen_sum, gen_out, std::cout, std::cerr);

    if (app.got_subcommand(evolve)) {
        const bool has_table = evolve->count("--table") > 0;
        bool has_n = evolve->count("--n") > 0;
        bool has_sum = evolve->count("--sum") > 0;
        if (paper_instance != 0) {
            const mep::KnapsackInstance inst = mep::preset_instance(paper_instance);
            const mep::EvolutionParams preset = mep::preset_params(paper_instance);
            if (!has_table) {
                if (!has_n) {
                    evolve_n = inst.n;
                    has_n = true;
                }
                if (!has_sum) {
                    evolve_sum = inst.k;
                    has_sum = true;
                }
            }
            if (evolve->count("--pop") == 0)
                cfg.params.population_size = preset.population_size;
            if (evolve->count("--genes") == 0)
                cfg.params.chromosome_length = preset.chromosome_length;
            if (evolve->count("--generations") == 0)
                cfg.params.generations = preset.generations;
        }
        if (has_n != has_sum) {
            std::cerr << "error: --n and --sum go together\n";
            return mep::kExitError;
        }
        if (has_n)
            cfg.instance = mep::KnapsackInstance{evolve_n, evolve_sum};
        if (has_table)
            cfg.table_path = evolve_table;
        return mep::cmd_evolve(cfg, std::cout, std::cerr);
    }

    if (app.got_subcommand(verify))
        return mep::cmd_verify(verify_netlist, verify_table, std::cout, std::cerr);

    if (app.got_subcommand(exp))
        return mep::cmd_export(export_netlist, export_format, export_out, std::cout, std::cerr);

    return mep::kExitError; // unreachable: a subcommand is required
}
