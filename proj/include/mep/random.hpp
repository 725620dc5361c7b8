// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace mep {

// Seeded random source with draws that are bit-identical on every platform.
//
// The engine is std::mt19937_64 (its raw output sequence is fixed by the
// standard), but the bounded-integer and real draws are implemented here
// because the std:: distributions are allowed to differ between standard
// library implementations. Evolution traces therefore reproduce exactly
// from a seed regardless of compiler or OS.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, n). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold)
                return x % n;
        }
    }

    // Uniform on [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform on [0, 1) with 53 bits of precision.
    double uniform_real01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real01() < p; }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace mep
