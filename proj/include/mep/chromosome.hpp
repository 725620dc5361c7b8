// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mep/primitives.hpp"
#include "mep/random.hpp"

namespace mep {

// One chromosome locus. A terminal refers to an input variable; a function
// applies a primitive to two earlier genes. Gene positions are 1-based
// everywhere (first gene is position 1) and function arguments must point
// strictly backwards: for a gene at position i, 1 <= arg < i. The two node
// kinds live at namespace scope so the variant member sees complete types.
struct TerminalGene {
    int var = 0; // 0-based input variable index
    bool operator==(const TerminalGene&) const = default;
};
struct FunctionGene {
    int op = 0;   // index into PrimitiveSet::functions
    int arg1 = 0; // 1-based gene position
    int arg2 = 0;
    bool operator==(const FunctionGene&) const = default;
};

struct Gene {
    using Terminal = TerminalGene;
    using Function = FunctionGene;

    std::variant<Terminal, Function> node;

    bool is_terminal() const { return std::holds_alternative<Terminal>(node); }
    const Terminal& terminal() const { return std::get<Terminal>(node); }
    const Function& function() const { return std::get<Function>(node); }

    static Gene make_terminal(int var) { return Gene{Terminal{var}}; }
    static Gene make_function(int op, int arg1, int arg2) {
        return Gene{Function{op, arg1, arg2}};
    }

    bool operator==(const Gene&) const = default;
};

// Fixed-length sequence of genes; every gene encodes one candidate
// expression. Stored 0-based internally, addressed 1-based through
// at()/set() to match the argument convention.
struct Chromosome {
    std::vector<Gene> genes;

    int length() const { return static_cast<int>(genes.size()); }
    const Gene& at(int position) const { return genes[position - 1]; }
    void set(int position, Gene g) { genes[position - 1] = std::move(g); }

    bool operator==(const Chromosome&) const = default;
};

struct Violation {
    int position = 0; // offending gene, 1-based
    std::string rule;
};

// Empty result means the chromosome satisfies every structural invariant:
// non-empty, first gene terminal, argument indices strictly below their
// position, terminal/function indices within the primitive set.
std::vector<Violation> validate(const Chromosome& c, const PrimitiveSet& pset);

inline bool is_valid(const Chromosome& c, const PrimitiveSet& pset) {
    return validate(c, pset).empty();
}

// Random gene for the given 1-based position. Position 1 is always a
// terminal; later positions draw a function with probability p_function
// (operator uniform, arguments uniform on [1, position-1]) and a uniform
// terminal otherwise.
Gene random_gene(int position, const PrimitiveSet& pset, RandomSource& rng,
                 double p_function);

Chromosome random_chromosome(int length, const PrimitiveSet& pset,
                             RandomSource& rng, double p_function);

// Text form, one gene per line: "1: a" / "3: + 1, 2". Round-trips through
// parse_chromosome.
std::string format_chromosome(const Chromosome& c, const PrimitiveSet& pset);

// Parses the format above; throws std::runtime_error naming the bad line.
Chromosome parse_chromosome(const std::string& text, const PrimitiveSet& pset);

} // namespace mep
