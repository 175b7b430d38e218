#include "lbcv/grid.hpp"

namespace lbcv {
namespace {

double axis_value(const AxisSpec& a, int k) {
    if (a.n <= 1) return a.min;
    return a.min + (a.max - a.min) * static_cast<double>(k) /
                       static_cast<double>(a.n - 1);
}

}  // namespace

std::vector<FramePoint> grid_points(const SpaceParams& sp, const GridSpec& grid,
                                    double delta_min) {
    std::vector<FramePoint> pts;
    pts.reserve(static_cast<std::size_t>(grid.x.n) * grid.y.n * grid.z.n);
    for (int i = 0; i < grid.x.n; ++i)
        for (int j = 0; j < grid.y.n; ++j)
            for (int k = 0; k < grid.z.n; ++k) {
                FramePoint p{axis_value(grid.x, i), axis_value(grid.y, j),
                             axis_value(grid.z, k)};
                if (delta(sp, p) > delta_min) pts.push_back(p);
            }
    return pts;
}

std::vector<FramePoint> sample_points(const SpaceParams& sp, const GridSpec& grid,
                                      std::uint64_t seed, int n_random,
                                      double delta_min) {
    std::vector<FramePoint> pts = grid_points(sp, grid, delta_min);
    std::mt19937_64 rng(seed);
    int accepted = 0;
    int attempts = 0;
    const int max_attempts = 1000 * (n_random + 1);
    while (accepted < n_random && attempts < max_attempts) {
        ++attempts;
        FramePoint p{uniform(rng, grid.x.min, grid.x.max),
                     uniform(rng, grid.y.min, grid.y.max),
                     uniform(rng, grid.z.min, grid.z.max)};
        if (delta(sp, p) > delta_min) {
            pts.push_back(p);
            ++accepted;
        }
    }
    return pts;
}

}  // namespace lbcv
