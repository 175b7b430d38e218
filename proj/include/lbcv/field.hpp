#pragma once

#include <array>
#include <functional>
#include <utility>

#include "lbcv/jet.hpp"
#include "lbcv/space.hpp"

namespace lbcv {

/// A scalar field evaluable as a 2-jet at any point: the value together
/// with all first and second partials. Evaluation must be deterministic.
using ScalarField = std::function<Jet2(const FramePoint&)>;

inline ScalarField constant_field(double c) {
    return [c](const FramePoint&) { return Jet2::constant(c); };
}

/// Coordinate field for axis 0=x, 1=y, 2=z.
inline ScalarField coordinate_field(int axis) {
    return [axis](const FramePoint& p) {
        const double val = axis == 0 ? p.x : (axis == 1 ? p.y : p.z);
        return Jet2::variable(axis, val);
    };
}

inline Jet2 jet_x(const FramePoint& p) { return Jet2::variable(0, p.x); }
inline Jet2 jet_y(const FramePoint& p) { return Jet2::variable(1, p.y); }
inline Jet2 jet_z(const FramePoint& p) { return Jet2::variable(2, p.z); }

/// Jet of delta = 1 + mu (x^2 + y^2), exact (polynomial).
inline Jet2 jet_delta(const SpaceParams& sp, const FramePoint& p) {
    const Jet2 x = jet_x(p), y = jet_y(p);
    return 1.0 + sp.mu * (x * x + y * y);
}

inline ScalarField operator+(ScalarField a, ScalarField b) {
    return [a = std::move(a), b = std::move(b)](const FramePoint& p) { return a(p) + b(p); };
}
inline ScalarField operator-(ScalarField a, ScalarField b) {
    return [a = std::move(a), b = std::move(b)](const FramePoint& p) { return a(p) - b(p); };
}
inline ScalarField operator*(ScalarField a, ScalarField b) {
    return [a = std::move(a), b = std::move(b)](const FramePoint& p) { return a(p) * b(p); };
}
inline ScalarField operator/(ScalarField a, ScalarField b) {
    return [a = std::move(a), b = std::move(b)](const FramePoint& p) { return a(p) / b(p); };
}
inline ScalarField operator*(double s, ScalarField a) {
    return [s, a = std::move(a)](const FramePoint& p) { return s * a(p); };
}
inline ScalarField operator-(ScalarField a) {
    return [a = std::move(a)](const FramePoint& p) { return -a(p); };
}

/// Candidate soliton field X = X1 E1 + X2 E2 + X3 E3 given by its frame
/// components as scalar fields.
struct VectorField {
    std::array<ScalarField, 3> comp{constant_field(0.0), constant_field(0.0),
                                    constant_field(0.0)};
};

inline VectorField zero_vector_field() { return VectorField{}; }

}  // namespace lbcv
