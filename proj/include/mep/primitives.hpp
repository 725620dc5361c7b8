// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

namespace mep {

// A two-input primitive. `name` is the token used in the chromosome text
// format ("+", "*", "g0", ...); `formula` is the display pattern with the
// placeholders a and b ("a+b", "a&!b", ...).
struct Primitive {
    std::string name;
    std::string formula;
};

// The function and terminal sets available to a chromosome. Function genes
// refer to primitives by index into `functions`; for the gate set that index
// is the gate id 0..9. Terminal i denotes input variable i (0-based).
struct PrimitiveSet {
    std::vector<Primitive> functions;
    int num_terminals = 0;
    // Optional display names for terminals; defaults to x0, x1, ...
    std::vector<std::string> terminal_names;

    std::string terminal_name(int var) const;
    int function_index(const std::string& name) const; // -1 if unknown
    int terminal_index(const std::string& name) const; // -1 if unknown
    bool ok() const;                                   // type invariants hold
};

inline constexpr int kNumGates = 10;

// The ten two-input gates, ids 0..9:
//   0 a&b   1 a&!b   2 !a&b   3 !a&!b   4 a^b
//   5 a^!b  6 a|b    7 a|!b   8 !a|b    9 !a|!b
// Text-format tokens are g0..g9.
PrimitiveSet gate_set(int num_inputs);

// {+, -, *} over `num_terminals` inputs named a, b, c, ... — the set used by
// the symbolic-regression fitness path and its worked examples.
PrimitiveSet arithmetic_set(int num_terminals);

} // namespace mep
