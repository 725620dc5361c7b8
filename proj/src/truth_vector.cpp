// SPDX-License-Identifier: MIT
#include "mep/truth_vector.hpp"

#include <fmt/core.h>

#include <bit>
#include <stdexcept>

namespace mep {

namespace {

std::size_t word_count(int num_inputs) {
    const std::size_t bits = std::size_t{1} << num_inputs;
    return (bits + 63) / 64;
}

} // namespace

TruthVector::TruthVector(int num_inputs) : num_inputs_(num_inputs) {
    if (num_inputs < 1 || num_inputs > kMaxInputs)
        throw std::invalid_argument(
            fmt::format("input count {} outside [1, {}]", num_inputs, kMaxInputs));
    words_.assign(word_count(num_inputs), 0);
}

TruthVector TruthVector::input_column(int var, int num_inputs) {
    if (var < 0 || var >= num_inputs)
        throw std::invalid_argument(
            fmt::format("variable {} outside [0, {})", var, num_inputs));
    TruthVector v(num_inputs);
    if (var < 6) {
        // Within one word the column is periodic: 2^var zeros, 2^var ones.
        std::uint64_t w = 0;
        const std::size_t period = std::size_t{1} << (var + 1);
        for (std::size_t c = 0; c < 64; ++c)
            if ((c & (period - 1)) >= period / 2)
                w |= std::uint64_t{1} << c;
        for (auto& word : v.words_)
            word = w;
    } else {
        // Whole words alternate: 2^(var-6) zero words, then as many ~0 words.
        const std::size_t period = std::size_t{1} << (var - 6 + 1);
        for (std::size_t i = 0; i < v.words_.size(); ++i)
            if ((i & (period - 1)) >= period / 2)
                v.words_[i] = ~std::uint64_t{0};
    }
    v.mask_tail();
    return v;
}

TruthVector TruthVector::from_binary_string(std::string_view s) {
    int n = -1;
    for (int i = 0; i <= kMaxInputs; ++i)
        if (s.size() == std::size_t{1} << i) {
            n = i;
            break;
        }
    if (n < 1)
        throw std::invalid_argument(
            fmt::format("binary string length {} is not 2^n with 1 <= n <= {}",
                        s.size(), kMaxInputs));
    TruthVector v(n);
    for (std::size_t c = 0; c < s.size(); ++c) {
        if (s[c] == '1')
            v.set_bit(c, true);
        else if (s[c] != '0')
            throw std::invalid_argument(
                fmt::format("non-binary character '{}' at position {}", s[c], c));
    }
    return v;
}

std::string TruthVector::to_binary_string() const {
    std::string s(size(), '0');
    for (std::size_t c = 0; c < size(); ++c)
        if (bit(c))
            s[c] = '1';
    return s;
}

std::size_t TruthVector::count_ones() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_)
        total += std::popcount(w);
    return total;
}

std::size_t TruthVector::hamming_distance(const TruthVector& other) const {
    if (num_inputs_ != other.num_inputs_)
        throw std::invalid_argument("truth vector length mismatch");
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += std::popcount(words_[i] ^ other.words_[i]);
    return total;
}

bool TruthVector::constant() const {
    const std::size_t ones = count_ones();
    return ones == 0 || ones == size();
}

void TruthVector::mask_tail() {
    const std::size_t bits = size();
    if (bits < 64)
        words_.back() &= (std::uint64_t{1} << bits) - 1;
}

void apply_gate_into(int gate, const TruthVector& a, const TruthVector& b,
                     TruthVector& out) {
    if (a.num_inputs() != b.num_inputs())
        throw std::invalid_argument("truth vector length mismatch");
    if (out.num_inputs() != a.num_inputs())
        out = TruthVector(a.num_inputs());
    const auto aw = a.words();
    const auto bw = b.words();
    const auto ow = out.words();
    switch (gate) {
    case 0: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = aw[i] & bw[i]; break;
    case 1: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = aw[i] & ~bw[i]; break;
    case 2: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = ~aw[i] & bw[i]; break;
    case 3: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = ~aw[i] & ~bw[i]; break;
    case 4: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = aw[i] ^ bw[i]; break;
    case 5: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = aw[i] ^ ~bw[i]; break;
    case 6: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = aw[i] | bw[i]; break;
    case 7: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = aw[i] | ~bw[i]; break;
    case 8: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = ~aw[i] | bw[i]; break;
    case 9: for (std::size_t i = 0; i < ow.size(); ++i) ow[i] = ~aw[i] | ~bw[i]; break;
    default:
        throw std::invalid_argument(fmt::format("unknown gate id {}", gate));
    }
    out.mask_tail();
}

TruthVector apply_gate(int gate, const TruthVector& a, const TruthVector& b) {
    TruthVector out(a.num_inputs());
    apply_gate_into(gate, a, b, out);
    return out;
}

} // namespace mep
