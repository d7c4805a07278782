#pragma once

#include <cstdint>
#include <initializer_list>

#include "linarr/rational.hpp"

namespace linarr {

/// Deterministic splitmix64 generator. Used instead of <random>
/// distributions so that seeded runs are byte-identical across
/// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform integer in [lo, hi], inclusive.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Integer-valued rational in [-range, range].
    Rat rat_in_box(long range) { return rat(int_in(-range, range)); }

    /// Derive a sub-seed from a list of tags. Stable across runs.
    static std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
        std::uint64_t h = 0x243f6a8885a308d3ULL;
        for (std::uint64_t p : parts) {
            h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            Rng r(h);
            h = r.next();
        }
        return h;
    }

private:
    std::uint64_t state_;
};

} // namespace linarr
