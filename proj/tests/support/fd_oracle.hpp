#pragma once

// Central finite-difference oracle for checking jet gradients and Hessians.
// Independent of the jet arithmetic: it only evaluates plain values.

#include <cmath>
#include <functional>

#include "lbcv/field.hpp"
#include "lbcv/jet.hpp"
#include "lbcv/space.hpp"

namespace lbcv::testing {

inline constexpr double kFdStep = 1e-4;
inline constexpr double kFdRelTol = 1e-6;

using PointFn = std::function<double(const FramePoint&)>;

inline FramePoint shifted(const FramePoint& p, int axis, double h) {
    FramePoint q = p;
    (axis == 0 ? q.x : axis == 1 ? q.y : q.z) += h;
    return q;
}

inline Jet2 fd_jet(const PointFn& f, const FramePoint& p, double h = kFdStep) {
    Jet2 j;
    j.v = f(p);
    for (int i = 0; i < 3; ++i)
        j.g[i] = (f(shifted(p, i, h)) - f(shifted(p, i, -h))) / (2.0 * h);
    for (int i = 0; i < 3; ++i)
        j.hess(i, i) =
            (f(shifted(p, i, h)) - 2.0 * j.v + f(shifted(p, i, -h))) / (h * h);
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k) {
            const FramePoint pp = shifted(shifted(p, i, h), k, h);
            const FramePoint pm = shifted(shifted(p, i, h), k, -h);
            const FramePoint mp = shifted(shifted(p, i, -h), k, h);
            const FramePoint mm = shifted(shifted(p, i, -h), k, -h);
            j.hess(i, k) = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
        }
    return j;
}

/// Relative error normalized by the larger of |a|, |b| and 1.
inline double rel_err(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) / scale;
}

/// Worst relative error between a jet and the finite-difference jet of the
/// same value function.
inline double jet_vs_fd(const Jet2& j, const PointFn& f, const FramePoint& p) {
    const Jet2 fd = fd_jet(f, p);
    double worst = rel_err(j.v, fd.v);
    for (int i = 0; i < 3; ++i) worst = std::max(worst, rel_err(j.g[i], fd.g[i]));
    for (int i = 0; i < 3; ++i)
        for (int k = i; k < 3; ++k)
            worst = std::max(worst, rel_err(j.hess(i, k), fd.hess(i, k)));
    return worst;
}

inline PointFn value_of(const ScalarField& f) {
    return [f](const FramePoint& p) { return f(p).v; };
}

inline double value_of(const ScalarField& f, const FramePoint& p) {
    return f(p).v;
}

/// Worst relative error between a field's own jet and its FD jet at p.
inline double jet_vs_fd(const ScalarField& f, const FramePoint& p) {
    return jet_vs_fd(f(p), value_of(f), p);
}

}  // namespace lbcv::testing
