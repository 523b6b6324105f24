#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "sylvdet/rational.hpp"

namespace sylvdet {

/// splitmix64 finalizer, used to fold several keys into one seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t combine_seed(std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (auto k : keys) h = mix64(h ^ k);
    return h;
}

/*
 * Small-rational generator. Uses the raw mt19937_64 stream (whose output
 * sequence is fixed by the standard) and plain modulo reduction, so the
 * draws do not depend on the standard library's distribution classes.
 */
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational draw(long bound) {
        const auto span = static_cast<std::uint64_t>(2 * bound + 1);
        const long num = static_cast<long>(engine_() % span) - bound;
        const long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(bound)) + 1;
        return Rational(num, den);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace sylvdet
