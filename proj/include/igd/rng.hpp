#pragma once

#include <cmath>
#include <cstdint>

#include "igd/vec.hpp"

namespace igd {

// Small self-contained generator (splitmix64 core). Identical seeds give
// bit-identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller.
    double gauss() {
        double u = uniform01();
        double v = uniform01();
        if (u <= 0.0) u = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

    // Uniform direction on the unit sphere of the given dimension (1 or 2).
    Vec unit_vec(int dim) {
        if (dim == 1) return Vec::make1(uniform01() < 0.5 ? -1.0 : 1.0);
        double t = 6.283185307179586476925286766559 * uniform01();
        return Vec::make2(std::cos(t), std::sin(t));
    }

private:
    std::uint64_t state_;
};

// Decorrelated per-task seed, so independent starts of a multi-start search
// can be ordered canonically while sharing one user-facing seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t task) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL + task * 0xd1342543de82ef95ULL));
    return r.next_u64();
}

}  // namespace igd
