#include "lbcv/catalog.hpp"

#include <cmath>

namespace lbcv {
namespace {

constexpr double kCaseTol = 1e-12;

bool is_zero(double v) { return std::abs(v) <= kCaseTol; }

const char* kCaveatBroadSteady =
    "steady solitons are claimed for every mu < 0 with lambda != 0, but the "
    "derivation requires the obstruction to vanish, i.e. mu = -lambda^2/4; "
    "no construction exists for this parameter pair";

}  // namespace

const char* to_string(SolitonKind k) {
    switch (k) {
        case SolitonKind::Shrinking: return "shrinking";
        case SolitonKind::Steady: return "steady";
        case SolitonKind::Expanding: return "expanding";
        case SolitonKind::None: return "none";
        case SolitonKind::FlatAnyGamma: return "flat-any-gamma";
    }
    return "unknown";
}

SolitonCandidate soliton_case1a(const SpaceParams& sp, const CoefficientSet& c) {
    if (is_zero(sp.lambda) || !is_zero(sp.mu))
        throw WrongCaseError("case 1a requires lambda != 0 and mu = 0");
    const double lam = sp.lambda;
    const double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2], a4 = c.a[3];
    VectorField X;
    X.comp[0] = [lam, a1, a3](const FramePoint& p) {
        return (2.0 * a1 * jet_y(p) + a3) / lam + (lam * lam / 2.0) * jet_x(p);
    };
    X.comp[1] = [lam, a1, a2](const FramePoint& p) {
        return -(2.0 * a1 * jet_x(p) + a2) / lam + (lam * lam / 2.0) * jet_y(p);
    };
    X.comp[2] = [lam, a1, a2, a3, a4](const FramePoint& p) {
        const Jet2 x = jet_x(p), y = jet_y(p);
        return lam * lam * jet_z(p) + a1 * (x * x + y * y) + a2 * x + a3 * y + a4;
    };
    return SolitonCandidate{std::move(X), 2.0 * lam * lam};
}

SolitonCandidate soliton_case1b(const SpaceParams& sp, const CoefficientSet& c,
                                Case1bRadialForm form) {
    if (is_zero(sp.lambda) || !is_zero(sp.mu + sp.lambda * sp.lambda / 4.0))
        throw WrongCaseError("case 1b requires lambda != 0 and mu = -lambda^2/4");
    const double lam = sp.lambda;
    const double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2], a4 = c.a[3];
    const double a5 = c.a[4], a6 = c.a[5];
    const SpaceParams cap = sp;
    // A = f / delta with f = a1 (x^2 + y^2) + a2 x + a3 y + a4.
    ScalarField A = [cap, a1, a2, a3, a4](const FramePoint& p) {
        const Jet2 x = jet_x(p), y = jet_y(p);
        return (a1 * (x * x + y * y) + a2 * x + a3 * y + a4) /
               jet_delta(cap, p);
    };
    // With f polynomial, delta dyA = dy f - (dy delta) A, which keeps the
    // component jets exact through second order.
    VectorField X;
    X.comp[0] = [cap, lam, a1, a3, a5, a6, A](const FramePoint& p) {
        const Jet2 dyf = 2.0 * a1 * jet_y(p) + a3;
        const Jet2 delta_dyA = dyf - (2.0 * cap.mu) * jet_y(p) * A(p);
        const Jet2 lz = lam * jet_z(p);
        return delta_dyA / lam + a5 * sin(lz) - a6 * cos(lz);
    };
    X.comp[1] = [cap, lam, a1, a2, a5, a6, A](const FramePoint& p) {
        const Jet2 dxf = 2.0 * a1 * jet_x(p) + a2;
        const Jet2 delta_dxA = dxf - (2.0 * cap.mu) * jet_x(p) * A(p);
        const Jet2 lz = lam * jet_z(p);
        return -delta_dxA / lam + a5 * cos(lz) + a6 * sin(lz);
    };
    // The radial form flag swaps only the X3 numerator; the
    // DifferenceOfSquares variant is the one the residual oracle rejects.
    if (form == Case1bRadialForm::SumOfSquares) {
        X.comp[2] = A;
    } else {
        X.comp[2] = [cap, a1, a2, a3, a4](const FramePoint& p) {
            const Jet2 x = jet_x(p), y = jet_y(p);
            return (a1 * (x * x - y * y) + a2 * x + a3 * y + a4) /
                   jet_delta(cap, p);
        };
    }
    return SolitonCandidate{std::move(X), 0.0};
}

SolitonCandidate soliton_case2(const SpaceParams& sp, double shift) {
    if (!is_zero(sp.lambda) || is_zero(sp.mu))
        throw WrongCaseError("case 2 requires lambda = 0 and mu != 0");
    const double mu = sp.mu;
    VectorField X;
    X.comp[2] = [mu, shift](const FramePoint& p) {
        return 2.0 * mu * jet_z(p) + shift;
    };
    return SolitonCandidate{std::move(X), 4.0 * mu};
}

SolitonCandidate soliton_case3(double gamma, const CoefficientSet& c) {
    const double a1 = c.a[0], a2 = c.a[1], a3 = c.a[2];
    const double a4 = c.a[3], a5 = c.a[4], a6 = c.a[5];
    VectorField X;
    X.comp[0] = [gamma, a1, a2, a3](const FramePoint& p) {
        return (gamma / 2.0) * jet_x(p) - a1 * jet_y(p) + a2 * jet_z(p) + a3;
    };
    X.comp[1] = [gamma, a1, a4, a5](const FramePoint& p) {
        return a1 * jet_x(p) + (gamma / 2.0) * jet_y(p) + a4 * jet_z(p) + a5;
    };
    X.comp[2] = [gamma, a2, a4, a6](const FramePoint& p) {
        return a2 * jet_x(p) + a4 * jet_y(p) + (gamma / 2.0) * jet_z(p) + a6;
    };
    return SolitonCandidate{std::move(X), gamma};
}

SolitonClass classify(const SpaceParams& sp) {
    const double lam = sp.lambda, mu = sp.mu;
    SolitonClass r;
    if (is_zero(lam)) {
        if (is_zero(mu)) {
            r.kind = SolitonKind::FlatAnyGamma;
            r.theorem_case = "Case 3";
            r.caveat = "flat space; solitons exist for every gamma";
        } else if (mu > 0.0) {
            r.kind = SolitonKind::Shrinking;
            r.gamma = 4.0 * mu;
            r.theorem_case = "(iv)";
        } else {
            r.kind = SolitonKind::Expanding;
            r.gamma = 4.0 * mu;
            r.theorem_case = "(v)";
        }
        return r;
    }
    if (is_zero(mu)) {
        r.kind = SolitonKind::Shrinking;
        r.gamma = 2.0 * lam * lam;
        r.theorem_case = "(ii)";
        return r;
    }
    if (mu > 0.0) {
        r.kind = SolitonKind::None;
        r.theorem_case = "(i)";
        return r;
    }
    if (is_zero(mu + lam * lam / 4.0)) {
        r.kind = SolitonKind::Steady;
        r.gamma = 0.0;
        r.theorem_case = "(iii)";
        return r;
    }
    r.kind = SolitonKind::None;
    r.theorem_case = "(iii)";
    r.caveat = kCaveatBroadSteady;
    return r;
}

ResidualReport killing_check(const SolitonCandidate& c, const SpaceParams& sp,
                             std::span<const FramePoint> points) {
    return killing_report(c.field, sp, points);
}

}  // namespace lbcv
