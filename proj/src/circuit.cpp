// SPDX-License-Identifier: MIT
#include "mep/circuit.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mep/evaluator.hpp"

namespace mep {

Netlist extract_circuit(const Chromosome& c, int position, int num_inputs) {
    if (position < 1 || position > c.length())
        throw std::out_of_range(fmt::format("gene position {} outside [1, {}]",
                                            position, c.length()));
    Netlist nl;
    // Width is either given explicitly or widened below from the variables
    // actually referenced.
    nl.inputs = num_inputs;

    const Gene& root = c.at(position);
    if (root.is_terminal()) {
        nl.inputs = std::max(nl.inputs, root.terminal().var + 1);
        nl.output = SourceRef::input(root.terminal().var);
        return nl;
    }

    // Mark the function genes reachable from the root.
    std::vector<char> reachable(c.length() + 1, 0);
    std::vector<int> stack{position};
    while (!stack.empty()) {
        const int pos = stack.back();
        stack.pop_back();
        if (reachable[pos] || c.at(pos).is_terminal())
            continue;
        reachable[pos] = 1;
        stack.push_back(c.at(pos).function().arg1);
        stack.push_back(c.at(pos).function().arg2);
    }

    // Renumber in chromosome order; argument positions are always lower,
    // so this order is topological.
    std::vector<int> node_id(c.length() + 1, 0);
    int next_id = 0;
    for (int pos = 1; pos <= position; ++pos)
        if (reachable[pos])
            node_id[pos] = ++next_id;

    auto source_for = [&](int pos) {
        const Gene& g = c.at(pos);
        if (g.is_terminal()) {
            nl.inputs = std::max(nl.inputs, g.terminal().var + 1);
            return SourceRef::input(g.terminal().var);
        }
        return SourceRef::node(node_id[pos]);
    };

    nl.nodes.reserve(next_id);
    for (int pos = 1; pos <= position; ++pos) {
        if (!reachable[pos])
            continue;
        const auto& f = c.at(pos).function();
        nl.nodes.push_back({f.op, source_for(f.arg1), source_for(f.arg2)});
    }
    nl.output = SourceRef::node(next_id);
    return nl;
}

namespace {

bool source_value(const SourceRef& s, std::uint64_t c, const std::vector<char>& computed) {
    if (s.is_input())
        return (c >> s.input_var()) & 1u;
    return computed[s.node_id()] != 0;
}

// Scalar gate semantics, written out gate by gate so this path shares
// nothing with the word-parallel evaluator it cross-checks.
bool scalar_gate(int gate, bool a, bool b) {
    switch (gate) {
    case 0: return a && b;
    case 1: return a && !b;
    case 2: return !a && b;
    case 3: return !a && !b;
    case 4: return a != b;
    case 5: return a == b;
    case 6: return a || b;
    case 7: return a || !b;
    case 8: return !a || b;
    case 9: return !a || !b;
    default:
        throw std::invalid_argument(fmt::format("unknown gate id {}", gate));
    }
}

} // namespace

bool evaluate_netlist_case(const Netlist& nl, std::uint64_t c) {
    std::vector<char> computed(nl.nodes.size() + 1, 0);
    for (std::size_t i = 0; i < nl.nodes.size(); ++i) {
        const auto& node = nl.nodes[i];
        computed[i + 1] = scalar_gate(node.gate, source_value(node.a, c, computed),
                                      source_value(node.b, c, computed));
    }
    return source_value(nl.output, c, computed);
}

std::vector<std::uint64_t> mismatching_cases(const Netlist& nl, const TruthTable& target) {
    if (nl.inputs > target.n)
        throw std::invalid_argument(
            fmt::format("netlist reads {} inputs but the table has {}", nl.inputs, target.n));
    std::vector<std::uint64_t> bad;
    const std::uint64_t cases = std::uint64_t{1} << target.n;
    for (std::uint64_t c = 0; c < cases; ++c)
        if (evaluate_netlist_case(nl, c) != target.outputs.bit(c))
            bad.push_back(c);
    return bad;
}

bool verify(const Netlist& nl, const TruthTable& target) {
    return mismatching_cases(nl, target).empty();
}

std::optional<Netlist> shortest_perfect_circuit(const Chromosome& c,
                                                const TruthTable& target) {
    BooleanEvaluator ev(target.n);
    const auto& columns = ev.evaluate(c);
    std::optional<Netlist> best;
    for (int pos = 1; pos <= c.length(); ++pos) {
        if (columns[pos - 1] != target.outputs)
            continue;
        Netlist nl = extract_circuit(c, pos, target.n);
        if (!best || gate_count(nl) < gate_count(*best))
            best = std::move(nl);
    }
    return best;
}

namespace {

const char* gate_formula(int gate) {
    static const char* formulas[kNumGates] = {
        "a&b", "a&!b", "!a&b", "!a&!b", "a^b",
        "a^!b", "a|b", "a|!b", "!a|b", "!a|!b",
    };
    if (gate < 0 || gate >= kNumGates)
        throw std::invalid_argument(fmt::format("unknown gate id {}", gate));
    return formulas[gate];
}

std::string source_token(const SourceRef& s) {
    return s.is_input() ? fmt::format("x{}", s.input_var())
                        : fmt::format("{}", s.node_id());
}

std::string dot_ref(const SourceRef& s) {
    return s.is_input() ? fmt::format("x{}", s.input_var())
                        : fmt::format("n{}", s.node_id());
}

} // namespace

std::string export_dot(const Netlist& nl) {
    std::string out = "digraph circuit {\n  rankdir=LR;\n";

    // Inputs referenced anywhere, in index order.
    std::vector<char> used(nl.inputs, 0);
    auto mark = [&](const SourceRef& s) {
        if (s.is_input())
            used[s.input_var()] = 1;
    };
    for (const auto& node : nl.nodes) {
        mark(node.a);
        mark(node.b);
    }
    mark(nl.output);
    for (int v = 0; v < nl.inputs; ++v)
        if (used[v])
            out += fmt::format("  x{0} [shape=plaintext, label=\"x{0}\"];\n", v);

    for (std::size_t i = 0; i < nl.nodes.size(); ++i)
        out += fmt::format("  n{} [shape=box, label=\"{}\"];\n", i + 1,
                           gate_formula(nl.nodes[i].gate));
    out += "  out [shape=plaintext, label=\"out\"];\n";

    for (std::size_t i = 0; i < nl.nodes.size(); ++i) {
        out += fmt::format("  {} -> n{} [label=\"a\"];\n", dot_ref(nl.nodes[i].a), i + 1);
        out += fmt::format("  {} -> n{} [label=\"b\"];\n", dot_ref(nl.nodes[i].b), i + 1);
    }
    out += fmt::format("  {} -> out;\n", dot_ref(nl.output));
    out += "}\n";
    return out;
}

std::string format_netlist(const Netlist& nl) {
    std::string out = fmt::format("inputs {}\n", nl.inputs);
    for (std::size_t i = 0; i < nl.nodes.size(); ++i)
        out += fmt::format("{}: g{} {}, {}\n", i + 1, nl.nodes[i].gate,
                           source_token(nl.nodes[i].a), source_token(nl.nodes[i].b));
    out += fmt::format("output {}\n", source_token(nl.output));
    return out;
}

std::string format_netlist_inline(const Netlist& nl) {
    std::string text = format_netlist(nl);
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!out.empty())
            out += "; ";
        out += line;
    }
    return out;
}

namespace {

[[noreturn]] void nl_fail(int line_no, const std::string& why) {
    throw std::runtime_error(fmt::format("line {}: {}", line_no, why));
}

SourceRef parse_source(const std::string& token, int line_no, int inputs, int max_node) {
    if (!token.empty() && token[0] == 'x') {
        int var = -1;
        try {
            var = std::stoi(token.substr(1));
        } catch (...) {
            nl_fail(line_no, fmt::format("bad input reference \"{}\"", token));
        }
        if (var < 0 || var >= inputs)
            nl_fail(line_no, fmt::format("input x{} outside [x0, x{})", var, inputs));
        return SourceRef::input(var);
    }
    int id = -1;
    try {
        id = std::stoi(token);
    } catch (...) {
        nl_fail(line_no, fmt::format("bad source reference \"{}\"", token));
    }
    if (id < 1 || id > max_node)
        nl_fail(line_no, fmt::format("node {} not defined yet", id));
    return SourceRef::node(id);
}

} // namespace

Netlist parse_netlist(const std::string& text) {
    // Accepts both the multi-line form and the "; "-joined inline form.
    std::string normalized = text;
    for (std::size_t at = 0; (at = normalized.find(';', at)) != std::string::npos;)
        normalized[at] = '\n';

    Netlist nl;
    bool have_inputs = false, have_output = false;
    std::istringstream in(normalized);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "inputs") {
            if (!(ls >> nl.inputs) || nl.inputs < 1 || nl.inputs > kMaxInputs)
                nl_fail(line_no, fmt::format("inputs must be in [1, {}]", kMaxInputs));
            have_inputs = true;
        } else if (first == "output") {
            if (!have_inputs)
                nl_fail(line_no, "output before inputs");
            std::string token;
            if (!(ls >> token))
                nl_fail(line_no, "missing output reference");
            nl.output = parse_source(token, line_no, nl.inputs,
                                     static_cast<int>(nl.nodes.size()));
            have_output = true;
        } else {
            if (!have_inputs)
                nl_fail(line_no, "gate line before inputs");
            if (first.empty() || first.back() != ':')
                nl_fail(line_no, "expected \"<id>: g<k> <src>, <src>\"");
            int id = -1;
            try {
                id = std::stoi(first.substr(0, first.size() - 1));
            } catch (...) {
                nl_fail(line_no, fmt::format("bad node id \"{}\"", first));
            }
            if (id != static_cast<int>(nl.nodes.size()) + 1)
                nl_fail(line_no, fmt::format("expected node id {}, got {}",
                                             nl.nodes.size() + 1, id));
            std::string op, a_token, b_token;
            if (!(ls >> op >> a_token >> b_token))
                nl_fail(line_no, "expected \"<id>: g<k> <src>, <src>\"");
            if (op.size() < 2 || op[0] != 'g')
                nl_fail(line_no, fmt::format("unknown gate \"{}\"", op));
            int gate = -1;
            try {
                gate = std::stoi(op.substr(1));
            } catch (...) {
                nl_fail(line_no, fmt::format("unknown gate \"{}\"", op));
            }
            if (gate < 0 || gate >= kNumGates)
                nl_fail(line_no, fmt::format("gate id {} outside [0, {})", gate, kNumGates));
            if (a_token.empty() || a_token.back() != ',')
                nl_fail(line_no, "expected a comma between sources");
            a_token.pop_back();
            nl.nodes.push_back({gate,
                                parse_source(a_token, line_no, nl.inputs, id - 1),
                                parse_source(b_token, line_no, nl.inputs, id - 1)});
        }
    }
    if (!have_inputs || !have_output)
        throw std::runtime_error("netlist missing inputs or output line");
    return nl;
}

} // namespace mep
