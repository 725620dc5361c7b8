// SPDX-License-Identifier: MIT
#include "mep/primitives.hpp"

#include <fmt/core.h>

namespace mep {

std::string PrimitiveSet::terminal_name(int var) const {
    if (var >= 0 && var < static_cast<int>(terminal_names.size()))
        return terminal_names[var];
    return fmt::format("x{}", var);
}

int PrimitiveSet::function_index(const std::string& name) const {
    for (std::size_t i = 0; i < functions.size(); ++i)
        if (functions[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int PrimitiveSet::terminal_index(const std::string& name) const {
    for (int i = 0; i < num_terminals; ++i)
        if (terminal_name(i) == name)
            return i;
    return -1;
}

bool PrimitiveSet::ok() const {
    if (functions.empty() || num_terminals < 1)
        return false;
    for (std::size_t i = 0; i < functions.size(); ++i)
        for (std::size_t j = i + 1; j < functions.size(); ++j)
            if (functions[i].name == functions[j].name)
                return false;
    return true;
}

PrimitiveSet gate_set(int num_inputs) {
    static const char* formulas[kNumGates] = {
        "a&b", "a&!b", "!a&b", "!a&!b", "a^b",
        "a^!b", "a|b", "a|!b", "!a|b", "!a|!b",
    };
    PrimitiveSet pset;
    pset.functions.reserve(kNumGates);
    for (int g = 0; g < kNumGates; ++g)
        pset.functions.push_back({fmt::format("g{}", g), formulas[g]});
    pset.num_terminals = num_inputs;
    return pset;
}

PrimitiveSet arithmetic_set(int num_terminals) {
    PrimitiveSet pset;
    pset.functions = {{"+", "a+b"}, {"-", "a-b"}, {"*", "a*b"}};
    pset.num_terminals = num_terminals;
    for (int i = 0; i < num_terminals; ++i)
        pset.terminal_names.push_back(std::string(1, static_cast<char>('a' + i % 26)));
    return pset;
}

} // namespace mep
