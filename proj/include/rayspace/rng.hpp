#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "rayspace/hilbert.hpp"

namespace rayspace {

// Seeded random source for sampling loops and tests. Built on std::mt19937_64
// (a fixed, fully specified generator) with explicit bit-to-double mappings,
// so a given seed produces the same stream on every platform. Distribution
// adapters from <random> are deliberately avoided: their output is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    Complex complex_in_disk(double radius) {
        while (true) {
            const double x = uniform(-radius, radius);
            const double y = uniform(-radius, radius);
            if (x * x + y * y <= radius * radius) return Complex{x, y};
        }
    }

    // Haar-random state of the given dimension.
    StateVector state(std::size_t dim) {
        std::vector<Complex> amps(dim);
        double norm_sq = 0.0;
        while (norm_sq == 0.0) {
            for (auto& a : amps) {
                a = Complex{normal(), normal()};
                norm_sq += std::norm(a);
            }
        }
        return normalize(StateVector(std::move(amps)));
    }

    StateVector qubit() { return state(2); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace rayspace
