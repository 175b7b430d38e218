#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lbcv {

/// The pair (lambda, mu) selecting a member of the LBCV family.
struct SpaceParams {
    double lambda = 0.0;
    double mu = 0.0;
};

/// A point of the coordinate domain. Membership in the space's domain D
/// requires delta(params, p) > 0; use domain_point() for a checked build.
struct FramePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Conformal factor delta = 1 + mu (x^2 + y^2). Positive exactly on D.
inline double delta(const SpaceParams& sp, const FramePoint& p) {
    return 1.0 + sp.mu * (p.x * p.x + p.y * p.y);
}

inline bool in_domain(const SpaceParams& sp, const FramePoint& p) {
    return delta(sp, p) > 0.0;
}

/// Checked constructor for points of D.
inline FramePoint domain_point(const SpaceParams& sp, double x, double y, double z) {
    FramePoint p{x, y, z};
    if (!in_domain(sp, p))
        throw std::domain_error("point outside domain: delta = " +
                                std::to_string(delta(sp, p)));
    return p;
}

/// Components with respect to the orthonormal frame (E1, E2, E3).
struct FrameVector {
    std::array<double, 3> c{};
};

/// Frame metric signature: g(E_i, E_i) = (+1, +1, -1). The -1 encodes the
/// Lorentzian dz-term of the metric.
inline constexpr std::array<double, 3> kSignature{1.0, 1.0, -1.0};

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 zero_mat3() { return Mat3{}; }

inline double max_abs(const Mat3& m) {
    double r = 0.0;
    for (const auto& row : m)
        for (double v : row) r = std::max(r, std::abs(v));
    return r;
}

}  // namespace lbcv
