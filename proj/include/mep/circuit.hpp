// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mep/chromosome.hpp"
#include "mep/knapsack.hpp"

namespace mep {

// Reference to a gate-node input: either a circuit input variable or an
// earlier node of the netlist (1-based node id). The alternatives live at
// namespace scope so the variant member sees complete types.
struct InputRef {
    int var = 0;
    bool operator==(const InputRef&) const = default;
};
struct NodeRef {
    int id = 0;
    bool operator==(const NodeRef&) const = default;
};

struct SourceRef {
    using Input = InputRef;
    using Node = NodeRef;
    std::variant<Input, Node> ref;

    bool is_input() const { return std::holds_alternative<Input>(ref); }
    int input_var() const { return std::get<Input>(ref).var; }
    int node_id() const { return std::get<Node>(ref).id; }

    static SourceRef input(int var) { return {Input{var}}; }
    static SourceRef node(int id) { return {Node{id}}; }

    bool operator==(const SourceRef&) const = default;
};

// Pruned gate DAG reachable from one gene. Nodes are topologically ordered
// (sources reference inputs or lower ids only); every node feeds the output.
struct Netlist {
    struct GateNode {
        int gate = 0; // gate id 0..9
        SourceRef a, b;
        bool operator==(const GateNode&) const = default;
    };

    int inputs = 0;
    std::vector<GateNode> nodes; // node ids are 1-based positions here
    SourceRef output;            // last node, or an input for gate-free circuits

    bool operator==(const Netlist&) const = default;
};

// Gate netlist of the expression rooted at gene `position`: reachable
// function genes only, renumbered 1..G in chromosome order; terminals
// become input references. `num_inputs` pins the circuit width; when 0 the
// width is the highest referenced variable + 1. Throws std::out_of_range on
// a bad position.
Netlist extract_circuit(const Chromosome& c, int position, int num_inputs = 0);

// Number of gate nodes; inputs are free.
inline int gate_count(const Netlist& nl) { return static_cast<int>(nl.nodes.size()); }

// Smallest netlist among genes whose column equals `target` exactly
// (ties to the lowest gene position); empty when no gene is perfect.
std::optional<Netlist> shortest_perfect_circuit(const Chromosome& c,
                                                const TruthTable& target);

// Case-by-case check of the netlist against a table. Re-derives every output
// with scalar boolean gates, independent of the bit-parallel evaluator, so
// the two paths cross-check each other.
bool verify(const Netlist& nl, const TruthTable& target);

// Case indices where the netlist disagrees with the table.
std::vector<std::uint64_t> mismatching_cases(const Netlist& nl, const TruthTable& target);

// Scalar evaluation of one case (bit j of `c` = input variable j).
bool evaluate_netlist_case(const Netlist& nl, std::uint64_t c);

// Graphviz text: inputs as plain nodes, gates as boxes labeled with their
// formulas, one marked output. Byte-identical for equal netlists.
std::string export_dot(const Netlist& nl);

// Plain-text listing mirroring the chromosome line format:
//   inputs <n>
//   <id>: g<k> <src>, <src>     (src is x<j> or a node id)
//   output <src>
std::string format_netlist(const Netlist& nl);
Netlist parse_netlist(const std::string& text); // throws, naming the bad line

// One-line rendering for CSV cells: the lines above joined with "; ".
std::string format_netlist_inline(const Netlist& nl);

} // namespace mep
