// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_RNG_HPP
#define HETBLOCK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace hetblock {

/// Deterministic random source built on mt19937_64. Doubles are derived
/// from the raw 64-bit stream directly (not through the standard
/// distributions, whose output is implementation-defined), so sequences
/// are identical across platforms and standard libraries.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, n).
    int below(int n) { return static_cast<int>(next_double() * n); }

    /// Index drawn from the probability vector by CDF scan.
    int categorical(const std::vector<double>& pi) {
        double u = next_double();
        double acc = 0.0;
        for (size_t v = 0; v < pi.size(); ++v) {
            acc += pi[v];
            if (u < acc) return static_cast<int>(v);
        }
        return static_cast<int>(pi.size()) - 1;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace hetblock

#endif
