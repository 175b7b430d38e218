#pragma once

// Seeded random scalar/vector fields (polynomial plus trig in z) and the
// closed-form frame tables used as references across the suites.

#include <cmath>
#include <random>
#include <vector>

#include "lbcv/field.hpp"
#include "lbcv/grid.hpp"
#include "lbcv/space.hpp"

namespace lbcv::testing {

/// Random polynomial of total degree <= 2 in (x, y, z) plus
/// c1 sin(lambda z) + c2 cos(lambda z), coefficients uniform in [-1, 1].
inline ScalarField random_field(std::mt19937_64& rng, double lambda) {
    std::array<double, 10> c{};
    for (double& v : c) v = uniform(rng, -1.0, 1.0);
    const double s1 = uniform(rng, -1.0, 1.0);
    const double s2 = uniform(rng, -1.0, 1.0);
    return [c, s1, s2, lambda](const FramePoint& p) {
        const Jet2 x = jet_x(p), y = jet_y(p), z = jet_z(p);
        Jet2 poly = c[0] + c[1] * x + c[2] * y + c[3] * z + c[4] * (x * x) +
                    c[5] * (y * y) + c[6] * (z * z) + c[7] * (x * y) +
                    c[8] * (x * z) + c[9] * (y * z);
        const Jet2 lz = lambda * z;
        return poly + s1 * sin(lz) + s2 * cos(lz);
    };
}

inline VectorField random_vector_field(std::mt19937_64& rng, double lambda) {
    VectorField X;
    for (int k = 0; k < 3; ++k) X.comp[k] = random_field(rng, lambda);
    return X;
}

/// Closed-form bracket: [E1,E2] = -2 mu y E1 + 2 mu x E2 + lambda E3,
/// [E1,E3] = [E2,E3] = 0 (1-based indices).
inline FrameVector bracket_table(int i, int j, const SpaceParams& sp,
                                 const FramePoint& p) {
    FrameVector r{};
    if ((i == 1 && j == 2) || (i == 2 && j == 1)) {
        const double s = i == 1 ? 1.0 : -1.0;
        r.c = {s * -2.0 * sp.mu * p.y, s * 2.0 * sp.mu * p.x, s * sp.lambda};
    }
    return r;
}

/// Closed-form connection table nabla_{E_i} E_j (1-based indices).
inline FrameVector connection_table(int i, int j, const SpaceParams& sp,
                                    const FramePoint& p) {
    const double mu = sp.mu, lam = sp.lambda, x = p.x, y = p.y;
    FrameVector r{};
    if (i == 1 && j == 1) r.c = {0.0, 2.0 * mu * y, 0.0};
    if (i == 1 && j == 2) r.c = {-2.0 * mu * y, 0.0, lam / 2.0};
    if (i == 1 && j == 3) r.c = {0.0, lam / 2.0, 0.0};
    if (i == 2 && j == 1) r.c = {0.0, -2.0 * mu * x, -lam / 2.0};
    if (i == 2 && j == 2) r.c = {2.0 * mu * x, 0.0, 0.0};
    if (i == 2 && j == 3) r.c = {-lam / 2.0, 0.0, 0.0};
    if (i == 3 && j == 1) r.c = {0.0, lam / 2.0, 0.0};
    if (i == 3 && j == 2) r.c = {-lam / 2.0, 0.0, 0.0};
    if (i == 3 && j == 3) r.c = {0.0, 0.0, 0.0};
    return r;
}

/// Closed-form curvature components: R_1212 = 4 mu + 3 lambda^2/4,
/// R_1313 = R_2323 = lambda^2/4, extended over all index combinations by
/// the usual pair (anti)symmetries.
inline double curvature_table(int i, int j, int k, int l, const SpaceParams& sp) {
    if (i == j || k == l) return 0.0;
    double sign = 1.0;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    if (i != k || j != l) return 0.0;  // distinct index pairs vanish here
    const double lam2 = sp.lambda * sp.lambda;
    if (i == 1 && j == 2) return sign * (4.0 * sp.mu + 0.75 * lam2);
    return sign * 0.25 * lam2;  // (1,3) and (2,3) planes
}

/// Deterministic sample of parameter pairs in [-2, 2]^2.
inline std::vector<SpaceParams> random_params(std::mt19937_64& rng, int n,
                                              double lo = -2.0, double hi = 2.0) {
    std::vector<SpaceParams> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.push_back({uniform(rng, lo, hi), uniform(rng, lo, hi)});
    return out;
}

}  // namespace lbcv::testing
