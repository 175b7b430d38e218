#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace lbcv {

/// Truncated second-order Taylor datum in the coordinates (x, y, z):
/// value, gradient and symmetric Hessian. All arithmetic propagates
/// derivatives exactly to order 2.
///
/// The Hessian is stored as the upper triangle (xx, xy, xz, yy, yz, zz),
/// so symmetry holds by construction.
struct Jet2 {
    double v = 0.0;
    std::array<double, 3> g{};
    std::array<double, 6> h{};

    static constexpr int tri_index(int i, int j) {
        if (i > j) std::swap(i, j);
        // (0,0)=0 (0,1)=1 (0,2)=2 (1,1)=3 (1,2)=4 (2,2)=5
        return i == 0 ? j : (i == 1 ? 2 + j : 1 + 2 * j);
    }

    double hess(int i, int j) const { return h[tri_index(i, j)]; }
    double& hess(int i, int j) { return h[tri_index(i, j)]; }

    /// The jet of the constant function c.
    static Jet2 constant(double c) { return Jet2{c, {}, {}}; }

    /// The jet of the coordinate function for `axis` (0=x, 1=y, 2=z)
    /// at coordinate value `value`: unit gradient, zero Hessian.
    static Jet2 variable(int axis, double value) {
        Jet2 j;
        j.v = value;
        j.g[axis] = 1.0;
        return j;
    }

    bool finite() const {
        if (!std::isfinite(v)) return false;
        for (double d : g)
            if (!std::isfinite(d)) return false;
        for (double d : h)
            if (!std::isfinite(d)) return false;
        return true;
    }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v + b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] + b.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = a.h[i] + b.h[i];
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v - b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] - b.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = a.h[i] - b.h[i];
    return r;
}

inline Jet2 operator-(const Jet2& a) {
    Jet2 r;
    r.v = -a.v;
    for (int i = 0; i < 3; ++i) r.g[i] = -a.g[i];
    for (int i = 0; i < 6; ++i) r.h[i] = -a.h[i];
    return r;
}

/// Leibniz rule through second order.
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v * b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            r.hess(i, j) = a.hess(i, j) * b.v + a.g[i] * b.g[j] +
                           a.g[j] * b.g[i] + a.v * b.hess(i, j);
    return r;
}

inline Jet2 operator*(double s, const Jet2& a) { return Jet2::constant(s) * a; }
inline Jet2 operator*(const Jet2& a, double s) { return s * a; }
inline Jet2 operator+(const Jet2& a, double s) { return a + Jet2::constant(s); }
inline Jet2 operator+(double s, const Jet2& a) { return a + s; }
inline Jet2 operator-(const Jet2& a, double s) { return a - Jet2::constant(s); }
inline Jet2 operator-(double s, const Jet2& a) { return Jet2::constant(s) - a; }

/// Reciprocal jet. Throws std::domain_error when the denominator value is 0.
inline Jet2 reciprocal(const Jet2& b) {
    if (b.v == 0.0)
        throw std::domain_error("jet division by zero-valued denominator");
    Jet2 r;
    const double inv = 1.0 / b.v;
    const double inv2 = inv * inv;
    const double inv3 = inv2 * inv;
    r.v = inv;
    for (int i = 0; i < 3; ++i) r.g[i] = -b.g[i] * inv2;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            r.hess(i, j) = 2.0 * b.g[i] * b.g[j] * inv3 - b.hess(i, j) * inv2;
    return r;
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
inline Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
inline Jet2 operator/(double s, const Jet2& b) { return s * reciprocal(b); }

/// Chain rule through sin.
inline Jet2 sin(const Jet2& a) {
    Jet2 r;
    const double s = std::sin(a.v), c = std::cos(a.v);
    r.v = s;
    for (int i = 0; i < 3; ++i) r.g[i] = c * a.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            r.hess(i, j) = c * a.hess(i, j) - s * a.g[i] * a.g[j];
    return r;
}

/// Chain rule through cos.
inline Jet2 cos(const Jet2& a) {
    Jet2 r;
    const double s = std::sin(a.v), c = std::cos(a.v);
    r.v = c;
    for (int i = 0; i < 3; ++i) r.g[i] = -s * a.g[i];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            r.hess(i, j) = -s * a.hess(i, j) - c * a.g[i] * a.g[j];
    return r;
}

}  // namespace lbcv
