#pragma once

#include <cstdint>
#include <random>

#include "bandlim/types.hpp"

namespace bandlim {

// splitmix64 step; used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stable per-trial seed from a base seed and a tuple of trial coordinates.
// Order-sensitive chaining keeps (n, m) and (m, n) distinct.
inline std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = base ^ 0x6a09e667f3bcc909ULL;
    std::uint64_t out = splitmix64(s);
    for (std::uint64_t p : parts) {
        s ^= p + 0x9e3779b97f4a7c15ULL + (out << 6) + (out >> 2);
        out = splitmix64(s);
    }
    return out;
}

// Deterministic RNG stream. mt19937_64 has a pinned sequence in the
// standard; the uniform and normal transforms below are pinned here so a
// given seed yields bit-identical draws on any conforming platform
// (std::normal_distribution is deliberately avoided, its algorithm is
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform on (0, 1), 53-bit resolution, never returns 0 or 1
    double uniform() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller, cosine branch only (no cached spare)
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // index draw from a normalized weight vector
    int categorical(const Vec& weights) {
        double u = uniform();
        double acc = 0.0;
        int last = static_cast<int>(weights.size()) - 1;
        for (int i = 0; i <= last; ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return last;  // guards against weights summing to 1 - eps
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace bandlim
