// SPDX-License-Identifier: MIT
#include "mep/knapsack.hpp"

#include <fmt/core.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mep {

bool subset_sum_oracle(const std::vector<std::int64_t>& members, std::int64_t k) {
    if (k < 0)
        return false;
    if (k == 0)
        return true; // the empty subset
    std::vector<char> reachable(static_cast<std::size_t>(k) + 1, 0);
    reachable[0] = 1;
    for (std::int64_t m : members) {
        if (m <= 0 || m > k)
            continue;
        for (std::int64_t s = k; s >= m; --s)
            if (reachable[s - m])
                reachable[s] = 1;
    }
    return reachable[static_cast<std::size_t>(k)] != 0;
}

std::vector<std::int64_t> case_members(std::uint64_t c, int n) {
    std::vector<std::int64_t> members;
    for (int j = 0; j < n; ++j)
        if ((c >> j) & 1u)
            members.push_back(j + 1);
    return members;
}

TruthTable generate_truth_table(const KnapsackInstance& inst) {
    if (!inst.ok())
        throw std::invalid_argument(
            fmt::format("bad knapsack instance n={} k={}", inst.n, inst.k));
    TruthTable t;
    t.n = inst.n;
    t.outputs = TruthVector(inst.n);
    t.label = fmt::format("knapsack n={} k={}", inst.n, inst.k);
    const std::uint64_t cases = std::uint64_t{1} << inst.n;
    for (std::uint64_t c = 0; c < cases; ++c)
        if (subset_sum_oracle(case_members(c, inst.n), inst.k))
            t.outputs.set_bit(c, true);
    return t;
}

std::string format_table(const TruthTable& t) {
    std::string out = fmt::format("inputs {}\n", t.n);
    if (!t.label.empty())
        out += fmt::format("label {}\n", t.label);
    out += fmt::format("table {}\n", t.outputs.to_binary_string());
    return out;
}

TruthTable parse_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    TruthTable t;
    bool have_inputs = false, have_table = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "inputs") {
            if (!(ls >> t.n) || t.n < 1 || t.n > kMaxInputs)
                throw std::runtime_error(fmt::format(
                    "line {}: inputs must be an integer in [1, {}]", line_no, kMaxInputs));
            have_inputs = true;
        } else if (key == "label") {
            std::getline(ls >> std::ws, t.label);
        } else if (key == "table") {
            if (!have_inputs)
                throw std::runtime_error(
                    fmt::format("line {}: table before inputs", line_no));
            std::string bits;
            ls >> bits;
            if (bits.size() != std::size_t{1} << t.n)
                throw std::runtime_error(fmt::format(
                    "line {}: table has {} entries, expected {}", line_no,
                    bits.size(), std::size_t{1} << t.n));
            try {
                t.outputs = TruthVector::from_binary_string(bits);
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error(fmt::format("line {}: {}", line_no, e.what()));
            }
            have_table = true;
        } else {
            throw std::runtime_error(
                fmt::format("line {}: unknown directive \"{}\"", line_no, key));
        }
    }
    if (!have_inputs || !have_table)
        throw std::runtime_error("truth table file missing inputs or table line");
    return t;
}

void save_table(const TruthTable& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
    out << format_table(t);
    if (!out)
        throw std::runtime_error(fmt::format("write to {} failed", path.string()));
}

TruthTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(fmt::format("cannot open {}", path.string()));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

} // namespace mep
