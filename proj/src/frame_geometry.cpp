#include "lbcv/frame_geometry.hpp"

#include <cassert>

namespace lbcv {
namespace {

// First-order jet: value plus gradient. Quantities obtained by taking one
// frame derivative of 2-jet data (structure functions, connection
// coefficients) carry exact first-order information only.
struct Jet1 {
    double v = 0.0;
    std::array<double, 3> g{};
};

Jet1 truncate(const Jet2& a) { return Jet1{a.v, a.g}; }

// 1-jet of the partial derivative of a 2-jet along `axis`.
Jet1 partial(const Jet2& a, int axis) {
    return Jet1{a.g[axis], {a.hess(axis, 0), a.hess(axis, 1), a.hess(axis, 2)}};
}

Jet1 operator+(const Jet1& a, const Jet1& b) {
    return Jet1{a.v + b.v, {a.g[0] + b.g[0], a.g[1] + b.g[1], a.g[2] + b.g[2]}};
}
Jet1 operator-(const Jet1& a, const Jet1& b) {
    return Jet1{a.v - b.v, {a.g[0] - b.g[0], a.g[1] - b.g[1], a.g[2] - b.g[2]}};
}
Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.v = a.v * b.v;
    for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    return r;
}
Jet1 operator*(double s, const Jet1& a) {
    return Jet1{s * a.v, {s * a.g[0], s * a.g[1], s * a.g[2]}};
}
Jet1 operator/(const Jet1& a, const Jet1& b) {
    Jet1 r;
    const double inv = 1.0 / b.v;
    r.v = a.v * inv;
    for (int i = 0; i < 3; ++i) r.g[i] = (a.g[i] - r.v * b.g[i]) * inv;
    return r;
}

// Everything the curvature needs at one point: frame coefficient values,
// structure functions C^k_ij with [E_i,E_j] = sum_k C^k_ij E_k, and the
// connection coefficients G^l_ij with nabla_{E_i}E_j = sum_l G^l_ij E_l,
// each as a 1-jet so one further frame derivative can be taken.
struct FrameData {
    std::array<std::array<double, 3>, 3> e{};  // e[i][coord axis]
    Jet1 C[3][3][3]{};                         // C[i][j][component]
    Jet1 G[3][3][3]{};                         // G[i][j][component]
};

std::array<Jet1, 3> bracket_frame_components(const std::array<Jet2, 3>* ej,
                                             int i, int j,
                                             const SpaceParams& sp,
                                             const FramePoint& p) {
    // Coordinate components of [E_i, E_j]: sum_l e_i^l d_l e_j^k - (i<->j).
    std::array<Jet1, 3> b;
    for (int k = 0; k < 3; ++k) {
        Jet1 acc;
        for (int l = 0; l < 3; ++l) {
            acc = acc + truncate(ej[i][l]) * partial(ej[j][k], l) -
                  truncate(ej[j][l]) * partial(ej[i][k], l);
        }
        b[k] = acc;
    }
    // Convert coordinate components to frame components: with
    // v = c1 E1 + c2 E2 + c3 E3 one has v^x = c1 delta, v^y = c2 delta,
    // v^z = c3 - c1 lambda y/2 + c2 lambda x/2.
    const Jet1 d = truncate(jet_delta(sp, p));
    const Jet1 xj = truncate(jet_x(p)), yj = truncate(jet_y(p));
    std::array<Jet1, 3> c;
    c[0] = b[0] / d;
    c[1] = b[1] / d;
    c[2] = b[2] + (sp.lambda / 2.0) * (yj * c[0]) - (sp.lambda / 2.0) * (xj * c[1]);
    return c;
}

FrameData make_frame_data(const SpaceParams& sp, const FramePoint& p) {
    FrameData fd;
    std::array<Jet2, 3> ej[3];
    for (int i = 0; i < 3; ++i) {
        ej[i] = frame_coefficient_jets(i + 1, sp, p);
        for (int k = 0; k < 3; ++k) fd.e[i][k] = ej[i][k].v;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            auto c = bracket_frame_components(ej, i, j, sp, p);
            for (int k = 0; k < 3; ++k) fd.C[i][j][k] = c[k];
        }
    // Koszul formula for a frame with constant metric components:
    //   g(nabla_{E_i}E_j, E_k)
    //     = (g([E_i,E_j],E_k) - g([E_j,E_k],E_i) + g([E_k,E_i],E_j)) / 2.
    auto cc = [&fd](int i, int j, int k) {  // g([E_i,E_j], E_k)
        return kSignature[k] * fd.C[i][j][k];
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                Jet1 low = 0.5 * (cc(i, j, l) - cc(j, l, i) + cc(l, i, j));
                fd.G[i][j][l] = kSignature[l] * low;
            }
    return fd;
}

// Frame derivative of a 1-jet quantity (value only).
double frame_dir(const FrameData& fd, int i, const Jet1& q) {
    return fd.e[i][0] * q.g[0] + fd.e[i][1] * q.g[1] + fd.e[i][2] * q.g[2];
}

}  // namespace

std::array<Jet2, 3> frame_coefficient_jets(int i, const SpaceParams& sp,
                                           const FramePoint& p) {
    assert(i >= 1 && i <= 3);
    const Jet2 zero = Jet2::constant(0.0);
    switch (i) {
        case 1:
            return {jet_delta(sp, p), zero, -(sp.lambda / 2.0) * jet_y(p)};
        case 2:
            return {zero, jet_delta(sp, p), (sp.lambda / 2.0) * jet_x(p)};
        default:
            return {zero, zero, Jet2::constant(1.0)};
    }
}

std::array<double, 3> frame_coefficients(int i, const SpaceParams& sp,
                                         const FramePoint& p) {
    auto j = frame_coefficient_jets(i, sp, p);
    return {j[0].v, j[1].v, j[2].v};
}

double frame_derivative(int i, const ScalarField& f, const SpaceParams& sp,
                        const FramePoint& p) {
    const Jet2 jf = f(p);
    const auto e = frame_coefficients(i, sp, p);
    return e[0] * jf.g[0] + e[1] * jf.g[1] + e[2] * jf.g[2];
}

FrameVector lie_bracket(int i, int j, const SpaceParams& sp, const FramePoint& p) {
    assert(i >= 1 && i <= 3 && j >= 1 && j <= 3);
    if (i == j) return FrameVector{};
    std::array<Jet2, 3> ej[3];
    for (int a = 0; a < 3; ++a) ej[a] = frame_coefficient_jets(a + 1, sp, p);
    auto c = bracket_frame_components(ej, i - 1, j - 1, sp, p);
    return FrameVector{{c[0].v, c[1].v, c[2].v}};
}

FrameVector connection_coeffs(int i, int j, const SpaceParams& sp,
                              const FramePoint& p) {
    assert(i >= 1 && i <= 3 && j >= 1 && j <= 3);
    const FrameData fd = make_frame_data(sp, p);
    FrameVector r;
    for (int l = 0; l < 3; ++l) r.c[l] = fd.G[i - 1][j - 1][l].v;
    return r;
}

double curvature_component(int i, int j, int k, int l, const SpaceParams& sp,
                           const FramePoint& p) {
    assert(i >= 1 && i <= 3 && j >= 1 && j <= 3);
    assert(k >= 1 && k <= 3 && l >= 1 && l <= 3);
    const FrameData fd = make_frame_data(sp, p);
    const int a = i - 1, b = j - 1, c = k - 1, d = l - 1;
    // Component along E_d of nabla_a nabla_b E_c - nabla_b nabla_a E_c
    // - nabla_[a,b] E_c.
    double r = frame_dir(fd, a, fd.G[b][c][d]) - frame_dir(fd, b, fd.G[a][c][d]);
    for (int m = 0; m < 3; ++m) {
        r += fd.G[b][c][m].v * fd.G[a][m][d].v - fd.G[a][c][m].v * fd.G[b][m][d].v;
        r -= fd.C[a][b][m].v * fd.G[m][c][d].v;
    }
    // Overall sign normalization; see the header.
    return -kSignature[d] * r;
}

Mat3 ricci(const SpaceParams& sp) {
    Mat3 r{};
    const double t = 4.0 * sp.mu + sp.lambda * sp.lambda;
    r[0][0] = t;
    r[1][1] = t;
    r[2][2] = 0.0;
    return r;
}

Mat3 ricci_contracted(const SpaceParams& sp, const FramePoint& p) {
    Mat3 r{};
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            double s = 0.0;
            for (int m = 1; m <= 3; ++m)
                s += curvature_component(i, m, j, m, sp, p);
            r[i - 1][j - 1] = s;
            r[j - 1][i - 1] = s;
        }
    return r;
}

}  // namespace lbcv
