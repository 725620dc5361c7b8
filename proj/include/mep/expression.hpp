// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <string>

#include "mep/chromosome.hpp"

namespace mep {

// Expression tree obtained by recursively substituting a gene's arguments.
// Shared sub-expressions are duplicated; this form is for display and for
// case-by-case oracle evaluation, never for fitness.
struct Expr {
    int op = -1;  // function index, or -1 for a terminal
    int var = -1; // terminal variable index when op < 0
    std::unique_ptr<Expr> lhs;
    std::unique_ptr<Expr> rhs;

    bool is_terminal() const { return op < 0; }
};

// Expression rooted at the 1-based gene `position`; throws std::out_of_range
// for positions outside [1, length].
Expr decode_expression(const Chromosome& c, int position);

// Infix rendering using each primitive's formula pattern; composite operands
// are parenthesized, terminals are not: "a+b", "(a+b)*(c+d)".
std::string to_infix(const Expr& e, const PrimitiveSet& pset);

inline std::string decode_infix(const Chromosome& c, int position,
                                const PrimitiveSet& pset) {
    return to_infix(decode_expression(c, position), pset);
}

} // namespace mep
