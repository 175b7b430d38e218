#include <doctest.h>

#include <cmath>
#include <random>

#include "lbcv/frame_geometry.hpp"
#include "lbcv/grid.hpp"
#include "support/fd_oracle.hpp"
#include "support/random_fields.hpp"

using namespace lbcv;
using namespace lbcv::testing;

namespace {

std::vector<FramePoint> sample_box(const SpaceParams& sp, std::uint64_t seed,
                                   int n = 20) {
    GridSpec g;
    g.x.n = g.y.n = g.z.n = 2;  // corners only; random points carry the load
    return sample_points(sp, g, seed, n, 0.1);
}

}  // namespace

TEST_CASE("delta values and domain membership") {
    CHECK(delta({0.0, 0.0}, {0.4, -0.7, 2.0}) == 1.0);
    CHECK(delta({0.0, 1.0}, {1, 1, 0}) == 3.0);
    CHECK(delta({0.0, -1.0}, {2, 0, 0}) == -3.0);
    CHECK_THROWS_AS(domain_point({0.0, -1.0}, 2, 0, 0), std::domain_error);
    CHECK_NOTHROW(domain_point({0.0, -1.0}, 0.5, 0, 0));
}

TEST_CASE("frame derivative examples") {
    const ScalarField fz = coordinate_field(2);
    CHECK(frame_derivative(3, fz, {1.0, 1.0}, {0.3, 0.1, 0.5}) == 1.0);
    // E1(z) = -lambda y / 2
    CHECK(frame_derivative(1, fz, {2.0, 0.7}, {0, 1, 0}) == -1.0);
    // E1(x) = delta
    const ScalarField fx = coordinate_field(0);
    CHECK(frame_derivative(1, fx, {0.0, 1.0}, {1, 1, 0}) == 3.0);
}

TEST_CASE("lie bracket matches the closed form") {
    CHECK(lie_bracket(1, 3, {1.3, 0.4}, {0.2, 0.5, -0.1}).c ==
          std::array<double, 3>{0, 0, 0});
    const FrameVector b = lie_bracket(1, 2, {2.0, 1.0}, {1, -1, 0});
    CHECK(b.c[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b.c[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b.c[2] == doctest::Approx(2.0).epsilon(1e-12));
    const FrameVector r = lie_bracket(2, 1, {2.0, 1.0}, {1, -1, 0});
    for (int k = 0; k < 3; ++k) CHECK(r.c[k] == doctest::Approx(-b.c[k]));

    std::mt19937_64 rng(11);
    for (const SpaceParams& sp : random_params(rng, 10)) {
        for (const FramePoint& p : sample_box(sp, 404, 5)) {
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const FrameVector got = lie_bracket(i, j, sp, p);
                    const FrameVector want = bracket_table(i, j, sp, p);
                    const FrameVector anti = lie_bracket(j, i, sp, p);
                    for (int k = 0; k < 3; ++k) {
                        CHECK(got.c[k] ==
                              doctest::Approx(want.c[k]).epsilon(1e-9));
                        CHECK(got.c[k] + anti.c[k] ==
                              doctest::Approx(0.0).epsilon(1e-12));
                    }
                }
        }
    }
}

TEST_CASE("connection coefficients match the closed table") {
    CHECK(connection_coeffs(3, 3, {1.7, -0.3}, {0.1, 0.2, 0.3}).c ==
          std::array<double, 3>{0, 0, 0});
    const FrameVector a = connection_coeffs(1, 2, {2.0, 1.0}, {0, 1, 0});
    CHECK(a.c[0] == doctest::Approx(-2.0));
    CHECK(a.c[1] == doctest::Approx(0.0));
    CHECK(a.c[2] == doctest::Approx(1.0));
    const FrameVector b = connection_coeffs(2, 3, {2.0, -0.8}, {0.4, -0.2, 5.0});
    CHECK(b.c[0] == doctest::Approx(-1.0));
    CHECK(b.c[1] == doctest::Approx(0.0));
    CHECK(b.c[2] == doctest::Approx(0.0));

    std::mt19937_64 rng(12);
    for (const SpaceParams& sp : random_params(rng, 10)) {
        for (const FramePoint& p : sample_box(sp, 405, 5)) {
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const FrameVector got = connection_coeffs(i, j, sp, p);
                    const FrameVector want = connection_table(i, j, sp, p);
                    for (int k = 0; k < 3; ++k)
                        CHECK(got.c[k] ==
                              doctest::Approx(want.c[k]).epsilon(1e-9));
                }
        }
    }
}

TEST_CASE("torsion-free and metric-compatible") {
    std::mt19937_64 rng(13);
    for (const SpaceParams& sp : random_params(rng, 8)) {
        for (const FramePoint& p : sample_box(sp, 406, 5)) {
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const FrameVector nij = connection_coeffs(i, j, sp, p);
                    const FrameVector nji = connection_coeffs(j, i, sp, p);
                    const FrameVector br = lie_bracket(i, j, sp, p);
                    for (int k = 0; k < 3; ++k)
                        CHECK(nij.c[k] - nji.c[k] ==
                              doctest::Approx(br.c[k]).epsilon(1e-10));
                    // E_i(g(E_j,E_k)) = 0, so the two connection terms of the
                    // compatibility identity must cancel.
                    for (int k = 1; k <= 3; ++k) {
                        const FrameVector nik = connection_coeffs(i, k, sp, p);
                        const double lhs =
                            kSignature[k - 1] * nij.c[k - 1] +
                            kSignature[j - 1] * nik.c[j - 1];
                        CHECK(lhs == doctest::Approx(0.0).epsilon(1e-10));
                    }
                }
        }
    }
}

TEST_CASE("curvature components match the closed forms and symmetries") {
    const SpaceParams sp{2.0, 1.0};
    const FramePoint p{0.2, -0.3, 0.7};
    CHECK(curvature_component(1, 2, 1, 2, sp, p) == doctest::Approx(7.0));
    CHECK(curvature_component(1, 3, 1, 3, sp, p) == doctest::Approx(1.0));
    CHECK(curvature_component(2, 3, 2, 3, sp, p) == doctest::Approx(1.0));
    CHECK(curvature_component(1, 1, 2, 3, sp, p) == doctest::Approx(0.0));

    std::mt19937_64 rng(14);
    for (const SpaceParams& q : random_params(rng, 6)) {
        for (const FramePoint& pt : sample_box(q, 407, 3)) {
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 1; k <= 3; ++k)
                        for (int l = 1; l <= 3; ++l) {
                            const double r = curvature_component(i, j, k, l, q, pt);
                            CHECK(r == doctest::Approx(curvature_table(i, j, k, l, q))
                                           .epsilon(1e-9));
                            CHECK(r == doctest::Approx(-curvature_component(
                                           j, i, k, l, q, pt)));
                            CHECK(r == doctest::Approx(-curvature_component(
                                           i, j, l, k, q, pt)));
                            CHECK(r == doctest::Approx(curvature_component(
                                           k, l, i, j, q, pt)));
                        }
        }
    }
}

TEST_CASE("first Bianchi identity") {
    std::mt19937_64 rng(15);
    for (const SpaceParams& sp : random_params(rng, 5)) {
        for (const FramePoint& p : sample_box(sp, 408, 3)) {
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 1; k <= 3; ++k)
                        for (int l = 1; l <= 3; ++l) {
                            const double cyc =
                                curvature_component(i, j, k, l, sp, p) +
                                curvature_component(j, k, i, l, sp, p) +
                                curvature_component(k, i, j, l, sp, p);
                            CHECK(cyc == doctest::Approx(0.0).epsilon(1e-9));
                        }
        }
    }
}

TEST_CASE("homogeneity: curvature is point-independent over a grid") {
    const SpaceParams sp{1.3, -0.4};
    GridSpec g;  // default 5x5x5 box
    const auto pts = grid_points(sp, g, 0.1);
    REQUIRE(pts.size() > 50);
    for (int i = 1; i <= 2; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            double lo = 1e300, hi = -1e300;
            for (const FramePoint& p : pts) {
                const double v = curvature_component(i, j, i, j, sp, p);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            CHECK(hi - lo <= 1e-9);
        }
}

TEST_CASE("normative ricci values") {
    const Mat3 a = ricci({2.0, 1.0});
    CHECK(a[0][0] == 8.0);
    CHECK(a[1][1] == 8.0);
    CHECK(a[2][2] == 0.0);
    CHECK(max_abs(ricci({0.0, 0.0})) == 0.0);
    const Mat3 b = ricci({2.0, -1.0});
    CHECK(max_abs(b) == 0.0);
}

// The contraction rho_ij = sum_m R_imjm reproduces the normative Ricci on
// the (1,1) and (2,2) entries and every off-diagonal, for all parameters.
// Its (3,3) entry is lambda^2/2, not 0: no placement of signature signs in
// the trace can cancel R_3131 against R_3232 (they are equal), so the
// normative (3,3) entry is not a contraction of these curvature
// components. This test pins the discrepancy exactly.
TEST_CASE("ricci contraction: agreement and pinned (3,3) discrepancy") {
    std::mt19937_64 rng(16);
    for (const SpaceParams& sp : random_params(rng, 20)) {
        const FramePoint p{0.25, -0.35, 0.55};
        if (!in_domain(sp, p)) continue;
        const Mat3 contracted = ricci_contracted(sp, p);
        const Mat3 normative = ricci(sp);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double expected =
                    (i == 2 && j == 2)
                        ? normative[i][j] + 0.5 * sp.lambda * sp.lambda
                        : normative[i][j];
                CHECK(contracted[i][j] ==
                      doctest::Approx(expected).epsilon(1e-9));
            }
    }
}
