// SPDX-License-Identifier: MIT
#include "mep/engine.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <utility>

namespace mep {

int tournament_select(const std::vector<Individual>& pop, RandomSource& rng) {
    if (pop.empty())
        throw std::invalid_argument("tournament_select: empty population");
    const auto n = static_cast<std::uint64_t>(pop.size());
    const int a = static_cast<int>(rng.below(n));
    const int b = static_cast<int>(rng.below(n));
    const double fa = pop[static_cast<std::size_t>(a)].fitness.best_fitness;
    const double fb = pop[static_cast<std::size_t>(b)].fitness.best_fitness;
    if (fa < fb)
        return a;
    if (fb < fa)
        return b;
    return rng.coin() ? a : b;
}

std::pair<Chromosome, Chromosome> crossover_with_mask(const Chromosome& p1,
                                                      const Chromosome& p2,
                                                      std::span<const bool> from_p1) {
    if (p1.length() != p2.length())
        throw std::invalid_argument("crossover_with_mask: parent lengths differ");
    if (from_p1.size() != static_cast<std::size_t>(p1.length()))
        throw std::invalid_argument("crossover_with_mask: mask length mismatch");
    Chromosome o1 = p1;
    Chromosome o2 = p2;
    for (std::size_t i = 0; i < from_p1.size(); ++i) {
        if (!from_p1[i]) {
            o1.genes[i] = p2.genes[i];
            o2.genes[i] = p1.genes[i];
        }
    }
    return {std::move(o1), std::move(o2)};
}

std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& p1,
                                                    const Chromosome& p2,
                                                    RandomSource& rng) {
    const auto n = static_cast<std::size_t>(p1.length());
    const auto mask = std::make_unique<bool[]>(n);
    for (std::size_t i = 0; i < n; ++i)
        mask[i] = rng.coin();
    return crossover_with_mask(p1, p2, std::span<const bool>(mask.get(), n));
}

std::vector<SymbolSlot> enumerate_slots(const Chromosome& c) {
    std::vector<SymbolSlot> slots;
    slots.reserve(static_cast<std::size_t>(c.length()) * 3);
    for (int pos = 1; pos <= c.length(); ++pos) {
        slots.push_back({pos, SlotKind::Head});
        if (!c.at(pos).is_terminal()) {
            slots.push_back({pos, SlotKind::Arg1});
            slots.push_back({pos, SlotKind::Arg2});
        }
    }
    return slots;
}

MutationEvent random_mutation_event(const Chromosome& c, const PrimitiveSet& pset,
                                    RandomSource& rng, double p_function) {
    const std::vector<SymbolSlot> slots = enumerate_slots(c);
    if (slots.empty())
        throw std::invalid_argument("random_mutation_event: empty chromosome");
    MutationEvent event;
    event.slot = slots[rng.below(slots.size())];
    if (event.slot.kind == SlotKind::Head)
        event.new_gene = random_gene(event.slot.position, pset, rng, p_function);
    else
        event.new_arg = rng.uniform_int(1, event.slot.position - 1);
    return event;
}

void apply_mutation_event(Chromosome& c, const MutationEvent& event) {
    const int pos = event.slot.position;
    if (pos < 1 || pos > c.length())
        throw std::out_of_range("apply_mutation_event: position out of range");
    if (event.slot.kind == SlotKind::Head) {
        c.set(pos, event.new_gene);
        return;
    }
    if (c.at(pos).is_terminal())
        throw std::invalid_argument("apply_mutation_event: argument slot on a terminal");
    Gene::Function f = c.at(pos).function();
    (event.slot.kind == SlotKind::Arg1 ? f.arg1 : f.arg2) = event.new_arg;
    c.set(pos, Gene::make_function(f.op, f.arg1, f.arg2));
}

namespace {

// One pass with per-slot probability rate; the expected number of events
// matches the exact-count scheme when rate = m / |slots|.
Chromosome mutate_probabilistic(Chromosome c, double rate, const PrimitiveSet& pset,
                                RandomSource& rng, double p_function) {
    for (int pos = 1; pos <= c.length(); ++pos) {
        if (rng.bernoulli(rate))
            c.set(pos, random_gene(pos, pset, rng, p_function));
        if (!c.at(pos).is_terminal()) {
            Gene::Function f = c.at(pos).function();
            if (rng.bernoulli(rate))
                f.arg1 = rng.uniform_int(1, pos - 1);
            if (rng.bernoulli(rate))
                f.arg2 = rng.uniform_int(1, pos - 1);
            c.set(pos, Gene::make_function(f.op, f.arg1, f.arg2));
        }
    }
    return c;
}

} // namespace

Chromosome mutate(const Chromosome& c, const EvolutionParams& params,
                  const PrimitiveSet& pset, RandomSource& rng) {
    Chromosome result = c;
    if (params.probabilistic_mutation) {
        const std::size_t slot_count = enumerate_slots(result).size();
        const double rate =
            slot_count == 0
                ? 0.0
                : std::min(1.0, static_cast<double>(params.mutations_per_chromosome) /
                                    static_cast<double>(slot_count));
        return mutate_probabilistic(std::move(result), rate, pset, rng, params.p_function);
    }
    for (int i = 0; i < params.mutations_per_chromosome; ++i) {
        const MutationEvent event =
            random_mutation_event(result, pset, rng, params.p_function);
        apply_mutation_event(result, event);
    }
    return result;
}

RunResult steady_state_run(const EvolutionParams& params, const PrimitiveSet& pset,
                           Objective& objective) {
    if (!params.ok())
        throw std::invalid_argument("steady_state_run: bad parameters");
    if (!pset.ok())
        throw std::invalid_argument("steady_state_run: bad primitive set");

    RandomSource rng(params.seed);
    RunResult run;
    run.seed = params.seed;

    const int pop_size = params.population_size;
    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(pop_size));
    for (int i = 0; i < pop_size; ++i) {
        Chromosome c =
            random_chromosome(params.chromosome_length, pset, rng, params.p_function);
        FitnessReport fitness = objective.evaluate(c);
        pop.push_back({std::move(c), std::move(fitness)});
    }
    run.evaluations = static_cast<std::size_t>(pop_size);

    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (pop[i].fitness.best_fitness < pop[best_idx].fitness.best_fitness)
            best_idx = i;
    Individual best = pop[best_idx];

    std::optional<int> first_hit;
    if (best.fitness.perfect())
        first_hit = 0;

    const int events_per_generation = pop_size / 2;
    bool stop = params.stop_on_success && first_hit.has_value();
    for (int g = 1; g <= params.generations && !stop; ++g) {
        for (int e = 0; e < events_per_generation && !stop; ++e) {
            const int i1 = tournament_select(pop, rng);
            const int i2 = tournament_select(pop, rng);
            const Chromosome& p1 = pop[static_cast<std::size_t>(i1)].chromosome;
            const Chromosome& p2 = pop[static_cast<std::size_t>(i2)].chromosome;

            Chromosome o1;
            Chromosome o2;
            if (rng.bernoulli(params.crossover_probability)) {
                auto offspring = uniform_crossover(p1, p2, rng);
                o1 = std::move(offspring.first);
                o2 = std::move(offspring.second);
            } else {
                o1 = p1;
                o2 = p2;
            }
            o1 = mutate(o1, params, pset, rng);
            o2 = mutate(o2, params, pset, rng);

            FitnessReport f1 = objective.evaluate(o1);
            FitnessReport f2 = objective.evaluate(o2);
            run.evaluations += 2;

            Individual child;
            if (f2.best_fitness < f1.best_fitness)
                child = {std::move(o2), std::move(f2)};
            else
                child = {std::move(o1), std::move(f1)};

            std::size_t worst = 0;
            for (std::size_t i = 1; i < pop.size(); ++i)
                if (pop[i].fitness.best_fitness > pop[worst].fitness.best_fitness)
                    worst = i;

            if (child.fitness.best_fitness < pop[worst].fitness.best_fitness) {
                pop[worst] = std::move(child);
                if (pop[worst].fitness.best_fitness < best.fitness.best_fitness)
                    best = pop[worst];
                if (!first_hit && best.fitness.perfect()) {
                    first_hit = g;
                    if (params.stop_on_success)
                        stop = true;
                }
            }
        }
    }

    run.success = best.fitness.perfect();
    run.best_fitness = best.fitness.best_fitness;
    run.best_gene = best.fitness.best_gene;
    run.first_hit_generation = first_hit;
    run.best_individual = std::move(best);
    return run;
}

} // namespace mep
