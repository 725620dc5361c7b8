// SPDX-License-Identifier: MIT
#include "mep/expression.hpp"

#include <fmt/core.h>

#include <stdexcept>

namespace mep {

Expr decode_expression(const Chromosome& c, int position) {
    if (position < 1 || position > c.length())
        throw std::out_of_range(fmt::format("gene position {} outside [1, {}]",
                                            position, c.length()));
    const Gene& g = c.at(position);
    Expr e;
    if (g.is_terminal()) {
        e.var = g.terminal().var;
        return e;
    }
    const auto& f = g.function();
    e.op = f.op;
    e.lhs = std::make_unique<Expr>(decode_expression(c, f.arg1));
    e.rhs = std::make_unique<Expr>(decode_expression(c, f.arg2));
    return e;
}

std::string to_infix(const Expr& e, const PrimitiveSet& pset) {
    if (e.is_terminal())
        return pset.terminal_name(e.var);

    auto operand = [&](const Expr& child) {
        std::string s = to_infix(child, pset);
        return child.is_terminal() ? s : "(" + s + ")";
    };
    const std::string a = operand(*e.lhs);
    const std::string b = operand(*e.rhs);

    // Substitute the a/b placeholders of the primitive's formula pattern.
    std::string out;
    for (char ch : pset.functions[e.op].formula) {
        if (ch == 'a')
            out += a;
        else if (ch == 'b')
            out += b;
        else
            out += ch;
    }
    return out;
}

} // namespace mep
