// SPDX-License-Identifier: MIT
#include "mep/chromosome.hpp"

#include <fmt/core.h>

#include <sstream>
#include <stdexcept>

namespace mep {

std::vector<Violation> validate(const Chromosome& c, const PrimitiveSet& pset) {
    std::vector<Violation> out;
    if (c.genes.empty()) {
        out.push_back({0, "chromosome must contain at least one gene"});
        return out;
    }
    if (!c.genes.front().is_terminal())
        out.push_back({1, "first gene must be a terminal"});

    for (int pos = 1; pos <= c.length(); ++pos) {
        const Gene& g = c.at(pos);
        if (g.is_terminal()) {
            const int var = g.terminal().var;
            if (var < 0 || var >= pset.num_terminals)
                out.push_back({pos, fmt::format("terminal index {} outside [0, {})",
                                                var, pset.num_terminals)});
        } else {
            const auto& f = g.function();
            if (f.op < 0 || f.op >= static_cast<int>(pset.functions.size()))
                out.push_back({pos, fmt::format("unknown function index {}", f.op)});
            if (f.arg1 < 1 || f.arg1 >= pos)
                out.push_back({pos, fmt::format("argument 1 ({}) not in [1, {})", f.arg1, pos)});
            if (f.arg2 < 1 || f.arg2 >= pos)
                out.push_back({pos, fmt::format("argument 2 ({}) not in [1, {})", f.arg2, pos)});
        }
    }
    return out;
}

Gene random_gene(int position, const PrimitiveSet& pset, RandomSource& rng,
                 double p_function) {
    if (position > 1 && rng.bernoulli(p_function)) {
        const int op = static_cast<int>(rng.below(pset.functions.size()));
        const int arg1 = rng.uniform_int(1, position - 1);
        const int arg2 = rng.uniform_int(1, position - 1);
        return Gene::make_function(op, arg1, arg2);
    }
    return Gene::make_terminal(static_cast<int>(rng.below(pset.num_terminals)));
}

Chromosome random_chromosome(int length, const PrimitiveSet& pset,
                             RandomSource& rng, double p_function) {
    Chromosome c;
    c.genes.reserve(length);
    for (int pos = 1; pos <= length; ++pos)
        c.genes.push_back(random_gene(pos, pset, rng, p_function));
    return c;
}

std::string format_chromosome(const Chromosome& c, const PrimitiveSet& pset) {
    std::string out;
    for (int pos = 1; pos <= c.length(); ++pos) {
        const Gene& g = c.at(pos);
        if (g.is_terminal())
            out += fmt::format("{}: {}\n", pos, pset.terminal_name(g.terminal().var));
        else
            out += fmt::format("{}: {} {}, {}\n", pos,
                               pset.functions[g.function().op].name,
                               g.function().arg1, g.function().arg2);
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
    throw std::runtime_error(fmt::format("line {}: {}", line_no, why));
}

} // namespace

Chromosome parse_chromosome(const std::string& text, const PrimitiveSet& pset) {
    Chromosome c;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        int pos = 0;
        char colon = 0;
        std::string symbol;
        if (!(ls >> pos >> colon >> symbol) || colon != ':')
            parse_fail(line_no, "expected \"<position>: <symbol>\"");
        if (pos != c.length() + 1)
            parse_fail(line_no, fmt::format("expected position {}, got {}",
                                            c.length() + 1, pos));

        const int fn = pset.function_index(symbol);
        if (fn >= 0) {
            int arg1 = 0, arg2 = 0;
            char comma = 0;
            if (!(ls >> arg1 >> comma >> arg2) || comma != ',')
                parse_fail(line_no, "expected \"<op> <arg1>, <arg2>\"");
            c.genes.push_back(Gene::make_function(fn, arg1, arg2));
        } else {
            const int var = pset.terminal_index(symbol);
            if (var < 0)
                parse_fail(line_no, fmt::format("unknown symbol \"{}\"", symbol));
            c.genes.push_back(Gene::make_terminal(var));
        }
    }
    if (const auto violations = validate(c, pset); !violations.empty())
        throw std::runtime_error(fmt::format("gene {}: {}", violations.front().position,
                                             violations.front().rule));
    return c;
}

} // namespace mep
