// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mep/chromosome.hpp"
#include "mep/evaluator.hpp"
#include "mep/knapsack.hpp"
#include "mep/random.hpp"

namespace mep {

struct EvolutionParams {
    int population_size = 20;
    int chromosome_length = 10;
    // Number of steady-state passes after the random initial population
    // (which counts as generation 0); each pass runs population_size / 2
    // mating events.
    int generations = 51;
    double crossover_probability = 0.9;
    int mutations_per_chromosome = 5;
    double p_function = 0.5;
    bool stop_on_success = true;
    // When set, mutation applies a per-slot rate with the same expected
    // event count instead of exactly mutations_per_chromosome events.
    bool probabilistic_mutation = false;
    std::uint64_t seed = 0;

    bool ok() const {
        return population_size >= 2 && chromosome_length >= 1 && generations >= 1 &&
               crossover_probability >= 0.0 && crossover_probability <= 1.0 &&
               mutations_per_chromosome >= 0 && p_function >= 0.0 && p_function <= 1.0;
    }
};

struct Individual {
    Chromosome chromosome;
    FitnessReport fitness;
};

// Fitness provider for one run; implementations may keep scratch state, so
// give each concurrent run its own clone.
class Objective {
public:
    virtual ~Objective() = default;
    virtual FitnessReport evaluate(const Chromosome& c) = 0;
    virtual std::unique_ptr<Objective> clone() const = 0;
};

class TruthTableObjective final : public Objective {
public:
    explicit TruthTableObjective(TruthTable table)
        : table_(std::move(table)), evaluator_(table_.n) {}

    FitnessReport evaluate(const Chromosome& c) override {
        return evaluator_.fitness(c, table_.outputs);
    }
    std::unique_ptr<Objective> clone() const override {
        return std::make_unique<TruthTableObjective>(table_);
    }
    const TruthTable& table() const { return table_; }

private:
    TruthTable table_;
    BooleanEvaluator evaluator_;
};

class RegressionObjective final : public Objective {
public:
    RegressionObjective(std::vector<RegressionCase> cases, PrimitiveSet pset)
        : cases_(std::move(cases)), pset_(std::move(pset)) {}

    FitnessReport evaluate(const Chromosome& c) override {
        return fitness_regression(c, cases_, pset_);
    }
    std::unique_ptr<Objective> clone() const override {
        return std::make_unique<RegressionObjective>(cases_, pset_);
    }

private:
    std::vector<RegressionCase> cases_;
    PrimitiveSet pset_;
};

// Binary tournament, two draws uniform with replacement; lower fitness wins,
// a fitness tie is settled by a coin (consumed even when both draws landed
// on the same index, so the draw sequence is predictable).
int tournament_select(const std::vector<Individual>& pop, RandomSource& rng);

// Offspring 1 takes the parent-1 gene wherever from_p1 is true, offspring 2
// the other parent's gene; positions keep their genes, so validity carries
// over from the parents.
std::pair<Chromosome, Chromosome> crossover_with_mask(const Chromosome& p1,
                                                      const Chromosome& p2,
                                                      std::span<const bool> from_p1);

// Uniform recombination: a fair coin per position.
std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& p1,
                                                    const Chromosome& p2,
                                                    RandomSource& rng);

// A mutable symbol slot: a gene's head, or one argument of a function gene.
enum class SlotKind { Head, Arg1, Arg2 };
struct SymbolSlot {
    int position = 0; // 1-based gene position
    SlotKind kind = SlotKind::Head;
    bool operator==(const SymbolSlot&) const = default;
};

// All slots of the chromosome in position order (head first, then the
// argument slots of function genes).
std::vector<SymbolSlot> enumerate_slots(const Chromosome& c);

// One mutation event: a head slot re-randomizes the whole gene (position 1
// stays terminal by the random_gene contract); an argument slot redraws
// uniformly on [1, position-1].
struct MutationEvent {
    SymbolSlot slot;
    Gene new_gene;   // Head events
    int new_arg = 0; // Arg events
};

MutationEvent random_mutation_event(const Chromosome& c, const PrimitiveSet& pset,
                                    RandomSource& rng, double p_function);
void apply_mutation_event(Chromosome& c, const MutationEvent& event);

// Exactly params.mutations_per_chromosome events, slots drawn uniformly with
// replacement over the chromosome's current slots (the universe shifts when
// a head event changes a gene's kind). With params.probabilistic_mutation,
// one sweep with an equivalent per-slot rate instead.
Chromosome mutate(const Chromosome& c, const EvolutionParams& params,
                  const PrimitiveSet& pset, RandomSource& rng);

struct RunResult {
    bool success = false;
    double best_fitness = 0.0;
    Individual best_individual;
    int best_gene = 0;
    // Generation where fitness 0 first appeared; 0 means the random initial
    // population already contained a perfect gene.
    std::optional<int> first_hit_generation;
    std::size_t evaluations = 0;
    std::uint64_t seed = 0;
};

// Steady-state evolution, fully determined by params.seed: random initial
// population, then per generation population_size/2 mating events. Each
// event tournament-selects two parents, recombines them with probability
// crossover_probability (clones otherwise), mutates both offspring, and
// lets the better offspring replace the current worst individual if its
// fitness is strictly lower (the weaker offspring is discarded).
RunResult steady_state_run(const EvolutionParams& params, const PrimitiveSet& pset,
                           Objective& objective);

} // namespace mep
