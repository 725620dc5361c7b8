// SPDX-License-Identifier: MIT
#include "mep/evaluator.hpp"

#include <fmt/core.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mep {

namespace {

FitnessReport report_from(std::vector<double> per_gene) {
    FitnessReport r;
    r.per_gene = std::move(per_gene);
    r.best_gene = 1;
    r.best_fitness = r.per_gene.front();
    for (std::size_t i = 1; i < r.per_gene.size(); ++i)
        if (r.per_gene[i] < r.best_fitness) { // ties keep the lowest position
            r.best_fitness = r.per_gene[i];
            r.best_gene = static_cast<int>(i) + 1;
        }
    return r;
}

} // namespace

BooleanEvaluator::BooleanEvaluator(int num_inputs) : num_inputs_(num_inputs) {
    inputs_.reserve(num_inputs);
    for (int v = 0; v < num_inputs; ++v)
        inputs_.push_back(TruthVector::input_column(v, num_inputs));
}

const std::vector<TruthVector>& BooleanEvaluator::evaluate(const Chromosome& c) {
    if (c.length() == 0)
        throw std::invalid_argument("empty chromosome");
    columns_.resize(c.length());
    for (int pos = 1; pos <= c.length(); ++pos) {
        const Gene& g = c.at(pos);
        TruthVector& out = columns_[pos - 1];
        if (g.is_terminal()) {
            const int var = g.terminal().var;
            if (var < 0 || var >= num_inputs_)
                throw std::invalid_argument(fmt::format(
                    "gene {} reads input {} but the table has {} inputs",
                    pos, var, num_inputs_));
            out = inputs_[var];
        } else {
            const auto& f = g.function();
            // Arguments point backwards, so both columns already exist.
            apply_gate_into(f.op, columns_[f.arg1 - 1], columns_[f.arg2 - 1], out);
            ++gate_applications_;
        }
    }
    return columns_;
}

FitnessReport BooleanEvaluator::fitness(const Chromosome& c, const TruthVector& target) {
    if (target.num_inputs() != num_inputs_)
        throw std::invalid_argument("target length does not match evaluator");
    const auto& columns = evaluate(c);
    std::vector<double> per_gene(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i)
        per_gene[i] = static_cast<double>(columns[i].hamming_distance(target));
    return report_from(std::move(per_gene));
}

std::vector<TruthVector> evaluate_boolean(const Chromosome& c, int num_inputs) {
    BooleanEvaluator ev(num_inputs);
    return ev.evaluate(c); // copies the scratch out
}

FitnessReport fitness_boolean(const Chromosome& c, const TruthVector& target) {
    BooleanEvaluator ev(target.num_inputs());
    return ev.fitness(c, target);
}

std::vector<double> evaluate_regression(const Chromosome& c,
                                        const RegressionCase& kase,
                                        const PrimitiveSet& pset) {
    if (static_cast<int>(kase.inputs.size()) != pset.num_terminals)
        throw std::invalid_argument(
            fmt::format("case has {} inputs, primitive set expects {}",
                        kase.inputs.size(), pset.num_terminals));
    std::vector<double> values(c.length());
    for (int pos = 1; pos <= c.length(); ++pos) {
        const Gene& g = c.at(pos);
        if (g.is_terminal()) {
            values[pos - 1] = kase.inputs[g.terminal().var];
            continue;
        }
        const auto& f = g.function();
        const double a = values[f.arg1 - 1];
        const double b = values[f.arg2 - 1];
        const std::string& op = pset.functions[f.op].name;
        double v;
        if (op == "+")
            v = a + b;
        else if (op == "-")
            v = a - b;
        else if (op == "*")
            v = a * b;
        else
            throw std::invalid_argument(
                fmt::format("primitive \"{}\" is not an arithmetic operator", op));
        values[pos - 1] = v;
    }
    return values;
}

FitnessReport fitness_regression(const Chromosome& c,
                                 const std::vector<RegressionCase>& cases,
                                 const PrimitiveSet& pset) {
    if (cases.empty())
        throw std::invalid_argument("empty regression case list");
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> per_gene(c.length(), 0.0);
    for (const RegressionCase& kase : cases) {
        const std::vector<double> values = evaluate_regression(c, kase, pset);
        for (int i = 0; i < c.length(); ++i) {
            const double err = std::abs(values[i] - kase.target);
            per_gene[i] = std::isfinite(err) ? per_gene[i] + err : inf;
        }
    }
    // A non-finite value anywhere marks the whole expression infeasible.
    for (double& f : per_gene)
        if (!std::isfinite(f))
            f = inf;
    return report_from(std::move(per_gene));
}

} // namespace mep
