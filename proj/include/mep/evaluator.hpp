// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <vector>

#include "mep/chromosome.hpp"
#include "mep/truth_vector.hpp"

namespace mep {

// Per-gene fitness plus the chromosome-level minimum. best_fitness is the
// minimum of per_gene, best_gene the lowest 1-based position attaining it.
// Boolean fitness values are whole mismatch counts; regression values are
// absolute-error sums with +infinity marking infeasible expressions.
struct FitnessReport {
    double best_fitness = 0.0;
    int best_gene = 0;
    std::vector<double> per_gene;

    bool perfect() const { return best_fitness == 0.0; }
};

// Evaluates every expression of a chromosome over all 2^n cases in one
// top-down pass, one gate application per function gene, reusing its column
// storage across calls. Not thread-safe; give each worker its own instance.
class BooleanEvaluator {
public:
    explicit BooleanEvaluator(int num_inputs);

    // Column of every gene; the reference stays valid until the next call.
    const std::vector<TruthVector>& evaluate(const Chromosome& c);

    // Hamming distance of every gene's column to `target`, minimum taken
    // per Eq-style min-over-genes with ties to the lowest position.
    FitnessReport fitness(const Chromosome& c, const TruthVector& target);

    int num_inputs() const { return num_inputs_; }

    // Total gate applications performed since construction (or reset);
    // lets tests pin the exactly-one-application-per-function-gene contract.
    std::size_t gate_applications() const { return gate_applications_; }
    void reset_gate_applications() { gate_applications_ = 0; }

private:
    int num_inputs_;
    std::vector<TruthVector> inputs_;  // canonical input columns
    std::vector<TruthVector> columns_; // per-gene scratch
    std::size_t gate_applications_ = 0;
};

// One-shot conveniences over a temporary evaluator.
std::vector<TruthVector> evaluate_boolean(const Chromosome& c, int num_inputs);
FitnessReport fitness_boolean(const Chromosome& c, const TruthVector& target);

// A regression fitness case: one input value per terminal, one target.
struct RegressionCase {
    std::vector<double> inputs;
    double target = 0.0;
};

// Value of every gene's expression for one case, computed in a single
// top-down pass over the arithmetic primitive set {+, -, *}. Non-finite
// results are kept as-is; fitness turns them into +infinity.
std::vector<double> evaluate_regression(const Chromosome& c,
                                        const RegressionCase& kase,
                                        const PrimitiveSet& pset);

// Sum over cases of |obtained - target| per gene, then min over genes.
// Throws std::invalid_argument on an empty case list.
FitnessReport fitness_regression(const Chromosome& c,
                                 const std::vector<RegressionCase>& cases,
                                 const PrimitiveSet& pset);

} // namespace mep
