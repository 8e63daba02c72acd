#ifndef BICQ_RANDOM_HPP
#define BICQ_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace bicq {

/// Seeded random stream used for every randomized construction.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not (their algorithms are left
/// to the library vendor), so the transforms are spelled out here:
///
///  - uniform:  ((w >> 11) + 0.5) * 2^-53, a double in the open interval (0, 1)
///  - gaussian: Box-Muller on two consecutive uniforms u1, u2, returning
///              sqrt(-2 ln u1) cos(2 pi u2) then sqrt(-2 ln u1) sin(2 pi u2)
///  - below(b): rejection sampling on the top bits of w, uniform in [0, b)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    double gaussian()
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    std::uint64_t below(std::uint64_t bound)
    {
        if (bound <= 1) return 0;
        // smallest all-ones mask covering bound - 1
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t candidate = engine_() & mask;
            if (candidate < bound) return candidate;
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace bicq

#endif
