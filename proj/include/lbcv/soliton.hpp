#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lbcv/field.hpp"
#include "lbcv/frame_geometry.hpp"
#include "lbcv/space.hpp"

namespace lbcv {

/// A candidate soliton: field X plus the soliton constant gamma of
/// L_X g + rho = gamma g.
struct SolitonCandidate {
    VectorField field;
    double gamma = 0.0;
};

/// Aggregated residual statistics over a point set. Aggregation is
/// deterministic: points are visited in their given order and ties keep the
/// earliest point.
struct ResidualReport {
    double max_abs = 0.0;
    std::vector<double> per_equation;  // max |residual| per equation/entry
    std::size_t points_evaluated = 0;
    FramePoint worst_point{};
};

/// Which form the (E1,E2) component of the Lie derivative uses.
/// Cross is 2mu x X2 + 2mu y X1 + E1(X2) + E2(X1), the form consistent with
/// the first-order system. Diagonal replaces E2(X1) by E2(X2); it is kept
/// only so tests can show it breaks the frame/PDE equivalence.
enum class MixedTermForm { Cross, Diagonal };

/// (L_X g)(E_i, E_j) as a symmetric 3x3 matrix:
///   (1,1): 2 (E1(X1) - 2 mu y X2)
///   (1,2): 2 mu x X2 + 2 mu y X1 + E1(X2) + E2(X1)
///   (1,3): E3(X1) - E1(X3) - lambda X2
///   (2,2): 2 (E2(X2) - 2 mu x X1)
///   (2,3): lambda X1 - E2(X3) + E3(X2)
///   (3,3): -2 E3(X3)
Mat3 lie_derivative_metric(const VectorField& X, const SpaceParams& sp,
                           const FramePoint& p,
                           MixedTermForm form = MixedTermForm::Cross);

/// Frame-form soliton residual L_X g (E_i,E_j) + rho_ij - gamma eta_ij,
/// with eta = diag(1,1,-1) and rho the normative Ricci.
Mat3 soliton_residual_frame(const SolitonCandidate& c, const SpaceParams& sp,
                            const FramePoint& p);

/// The six residuals of the first-order PDE form of the soliton equation
/// (left minus right), with rho11 = 4 mu + lambda^2:
///   1: 2 mu y X2 - delta dx X1 + (lambda/2) y dz X1 - (rho11 - gamma)/2
///   2: 2 mu x X2 + 2 mu y X1 + delta dx X2 - (lambda/2) y dz X2
///      + delta dy X1 + (lambda/2) x dz X1
///   3: -lambda X2 - delta dx X3 + (lambda/2) y dz X3 + dz X1
///   4: 2 mu x X1 - delta dy X2 - (lambda/2) x dz X2 - (rho11 - gamma)/2
///   5: lambda X1 - delta dy X3 - (lambda/2) x dz X3 + dz X2
///   6: dz X3 - gamma/2
std::array<double, 6> soliton_residual_pde(const SolitonCandidate& c,
                                           const SpaceParams& sp,
                                           const FramePoint& p);

/// Max discrepancy between the two residual formulations at p. PDE line k
/// corresponds to frame entry (1,1),(1,2),(1,3),(2,2),(2,3),(3,3) with
/// scale factors (-2, 1, 1, -2, 1, -2). Should be ~0 for every field.
double equivalence_check(const SolitonCandidate& c, const SpaceParams& sp,
                         const FramePoint& p,
                         MixedTermForm form = MixedTermForm::Cross);

/// Which form of the integrability constraints on A(x, y) to evaluate.
/// OnA is the pair directly in A; OnDeltaA is the equivalent pair in
/// f = delta * A. The residuals are related by r_f = (r_A1/delta,
/// -r_A2/delta).
enum class ConstraintForm { OnA, OnDeltaA };

/// Integrability constraints on the z-independent part A of X3 when
/// lambda != 0, with Delta = lambda mu (2 mu + lambda^2/2):
///   OnA form:
///    1: Delta (x^2 - y^2) + delta (2 mu (x dyA + y dxA) + delta dxdy A)
///    2: 4 Delta x y + delta (4 mu (y dyA - x dxA) + delta (dy^2 A - dx^2 A))
///   OnDeltaA form (f = delta A):
///    1: dxdy f - Delta (y^2 - x^2) / delta
///    2: (dx^2 f - dy^2 f) - 4 Delta x y / delta
/// Preconditions: lambda != 0 and A independent of z; violations throw
/// std::invalid_argument.
std::array<double, 2> constraint_residual(const ScalarField& A,
                                          const SpaceParams& sp,
                                          const FramePoint& p,
                                          ConstraintForm form = ConstraintForm::OnA);

/// The obstruction constant Delta = lambda mu (2 mu + lambda^2 / 2);
/// zero exactly when mu = 0 or mu = -lambda^2/4. Requires lambda != 0.
double obstruction_delta(const SpaceParams& sp);

/// Max-abs report of the PDE-form residuals over a point set.
ResidualReport verify_pde(const SolitonCandidate& c, const SpaceParams& sp,
                          std::span<const FramePoint> points);

/// Max-abs report of the frame-form residuals over a point set
/// (per_equation holds the 6 independent entries in the order above).
ResidualReport verify_frame(const SolitonCandidate& c, const SpaceParams& sp,
                            std::span<const FramePoint> points);

/// Max |(L_X g)(E_i,E_j)| over a point set; zero iff X is Killing there.
ResidualReport killing_report(const VectorField& X, const SpaceParams& sp,
                              std::span<const FramePoint> points);

}  // namespace lbcv
