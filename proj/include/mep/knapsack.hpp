// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mep/truth_vector.hpp"

namespace mep {

// Subset-sum instance over the base set {1, ..., n} with a fixed target sum.
// Each fitness case encodes a member set M: bit j of the case index (bit 0
// least significant) says whether the number j+1 belongs to M. Targets with
// k = 0 or k > n(n+1)/2 give constant tables; they are generated, not
// rejected, and flag constant_table().
struct KnapsackInstance {
    int n = 0;
    std::int64_t k = 0;

    std::int64_t max_sum() const { return std::int64_t{n} * (n + 1) / 2; }
    bool constant_table() const { return k <= 0 || k > max_sum(); }
    bool ok() const { return n >= 1 && n <= kMaxInputs && k >= 0; }
};

// True iff some subset of `members` (the empty subset included, summing
// to 0) adds up to exactly `k`. Dynamic programming over achievable sums.
bool subset_sum_oracle(const std::vector<std::int64_t>& members, std::int64_t k);

// Single-output truth table plus provenance text.
struct TruthTable {
    int n = 0;
    TruthVector outputs;
    std::string label;

    bool operator==(const TruthTable&) const = default;
};

// Output bit c = subset_sum_oracle(M(c), k) for every case c in [0, 2^n).
TruthTable generate_truth_table(const KnapsackInstance& inst);

// Member set encoded by a case index: { j+1 : bit j of c is 1 }.
std::vector<std::int64_t> case_members(std::uint64_t c, int n);

// Text format, bit-exact:
//   inputs <n>
//   label <free text, optional line>
//   table <binary string of length 2^n; char at position c = case c>
std::string format_table(const TruthTable& t);
TruthTable parse_table(const std::string& text); // throws, naming the bad line

void save_table(const TruthTable& t, const std::filesystem::path& path);
TruthTable load_table(const std::filesystem::path& path);

} // namespace mep
