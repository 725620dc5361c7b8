// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mep {

// Highest supported circuit input count (tables have 2^n rows).
inline constexpr int kMaxInputs = 20;

// A node's output bit for every fitness case, packed 64 cases per word so
// one gate application covers up to 64 cases. Bit c (case index c) lives at
// words()[c / 64] >> (c % 64). Unused tail bits of the last word are kept
// zero so popcount and equality work on whole words.
class TruthVector {
public:
    TruthVector() = default;

    // All-zero vector over 2^num_inputs cases; 1 <= num_inputs <= kMaxInputs.
    explicit TruthVector(int num_inputs);

    // Canonical column of input variable `var`: bit c = bit `var` of the
    // case index c (bit 0 = least significant).
    static TruthVector input_column(int var, int num_inputs);

    // "0100..." with the character at 0-based string position c giving the
    // output for case c. Length must be a power of two.
    static TruthVector from_binary_string(std::string_view s);
    std::string to_binary_string() const;

    int num_inputs() const { return num_inputs_; }
    std::size_t size() const { return std::size_t{1} << num_inputs_; }

    bool bit(std::size_t c) const {
        return (words_[c >> 6] >> (c & 63)) & 1u;
    }
    void set_bit(std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            words_[c >> 6] |= mask;
        else
            words_[c >> 6] &= ~mask;
    }

    std::size_t count_ones() const;
    std::size_t hamming_distance(const TruthVector& other) const;
    bool constant() const; // all cases agree

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    // Zeroes the tail bits of the last word; call after writing raw words.
    void mask_tail();

    bool operator==(const TruthVector&) const = default;

private:
    int num_inputs_ = 0;
    std::vector<std::uint64_t> words_;
};

// Bitwise application of gate `gate` (0..9) over all cases:
//   0 a&b   1 a&!b   2 !a&b   3 !a&!b   4 a^b
//   5 a^!b  6 a|b    7 a|!b   8 !a|b    9 !a|!b
// Throws std::invalid_argument on unknown id or length mismatch.
TruthVector apply_gate(int gate, const TruthVector& a, const TruthVector& b);

// In-place variant writing into `out` (already sized like `a`); the
// evaluator's hot path, no allocation.
void apply_gate_into(int gate, const TruthVector& a, const TruthVector& b,
                     TruthVector& out);

} // namespace mep
