#pragma once

#include "latsym/rational.hpp"

#include <cstdint>
#include <random>

namespace latsym {

/// Seeded generator with a fixed bit-to-double mapping, so identical seeds
/// give identical streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    long uniform_int(long lo, long hi) { // inclusive
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational uniform_rational(long num_range, long den_range) {
        const long num = uniform_int(-num_range, num_range);
        const long den = uniform_int(1, den_range);
        return Rational(num, den);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace latsym
