#pragma once

#include "lbcv/field.hpp"
#include "lbcv/jet.hpp"
#include "lbcv/space.hpp"

namespace lbcv {

// Frame indices are 1-based throughout this header, mirroring the labels
// E1, E2, E3. Returned arrays are 0-based.
//
// The orthonormal frame of the LBCV space (D, g_{lambda,mu}):
//   E1 = delta d/dx - (lambda y / 2) d/dz
//   E2 = delta d/dy + (lambda x / 2) d/dz
//   E3 = d/dz
// with g(E_i, E_j) = diag(+1, +1, -1).

/// Coordinate components of E_i at p, as exact 2-jets of the point.
std::array<Jet2, 3> frame_coefficient_jets(int i, const SpaceParams& sp,
                                           const FramePoint& p);

/// Coordinate components of E_i at p (values only).
std::array<double, 3> frame_coefficients(int i, const SpaceParams& sp,
                                         const FramePoint& p);

/// Directional derivative E_i(f)(p).
double frame_derivative(int i, const ScalarField& f, const SpaceParams& sp,
                        const FramePoint& p);

/// [E_i, E_j] at p, in frame components, computed by jet differentiation of
/// the frame coefficient functions (not from a hard-coded table).
FrameVector lie_bracket(int i, int j, const SpaceParams& sp, const FramePoint& p);

/// nabla_{E_i} E_j at p, in frame components, via the Koszul formula
/// specialized to a frame with constant metric components.
FrameVector connection_coeffs(int i, int j, const SpaceParams& sp,
                              const FramePoint& p);

/// Curvature component R_ijkl = g(R(E_i,E_j)E_k, E_l).
///
/// Internally the curvature operator is R(X,Y)Z = nabla_X nabla_Y Z
/// - nabla_Y nabla_X Z - nabla_[X,Y] Z; the returned component carries an
/// overall sign flip so the nonzero values come out as
///   R_1212 = 4 mu + 3 lambda^2 / 4,   R_1313 = R_2323 = lambda^2 / 4,
/// the closed forms the rest of the library is anchored to. Constant over p.
double curvature_component(int i, int j, int k, int l, const SpaceParams& sp,
                           const FramePoint& p);

/// The normative Ricci tensor in frame components:
///   diag(4 mu + lambda^2, 4 mu + lambda^2, 0).
/// This is the closed form the soliton equations are built on.
///
/// NOTE: no trace of the curvature tensor reproduces this matrix when
/// lambda != 0. The signature-weighted contraction (ricci_contracted)
/// matches the (1,1) and (2,2) entries and every off-diagonal, but its
/// (3,3) entry is lambda^2/2 rather than 0; the honest trace of the
/// curvature operator is diag(4mu + lambda^2/2, 4mu + lambda^2/2,
/// lambda^2/2), which differs from the normative matrix by exactly
/// (lambda^2/2) * diag(1,1,-1). Both identities are pinned by tests.
Mat3 ricci(const SpaceParams& sp);

/// Contraction of the curvature components: rho_ij = sum_m R_imjm, i.e. the
/// signature-weighted trace of Z -> R(E_i, Z) E_j. See the note on ricci().
Mat3 ricci_contracted(const SpaceParams& sp, const FramePoint& p);

}  // namespace lbcv
