#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lbcv/space.hpp"

namespace lbcv {

struct AxisSpec {
    double min = -0.9;
    double max = 0.9;
    int n = 5;
};

struct GridSpec {
    AxisSpec x{}, y{}, z{};
};

/// Portable uniform double in [0,1); std::uniform_real_distribution is
/// implementation-defined, and sweep output must be byte-identical.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * uniform01(rng);
}

/// Deterministic lattice points of the grid box, keeping only points with
/// delta > delta_min. Lexicographic (x, y, z) order.
std::vector<FramePoint> grid_points(const SpaceParams& sp, const GridSpec& grid,
                                    double delta_min = 0.05);

/// grid_points plus n_random seeded random points from the same box (also
/// filtered by delta > delta_min). Deterministic for a fixed seed.
std::vector<FramePoint> sample_points(const SpaceParams& sp, const GridSpec& grid,
                                      std::uint64_t seed, int n_random = 100,
                                      double delta_min = 0.05);

}  // namespace lbcv
