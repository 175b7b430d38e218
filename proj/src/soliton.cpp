#include "lbcv/soliton.hpp"

#include <cmath>
#include <stdexcept>

namespace lbcv {
namespace {

struct Eval {
    std::array<Jet2, 3> X;   // jets of the frame components at p
    std::array<std::array<double, 3>, 3> e;  // frame coefficient values
    double dlt;
};

Eval evaluate(const VectorField& X, const SpaceParams& sp, const FramePoint& p) {
    Eval ev;
    for (int k = 0; k < 3; ++k) ev.X[k] = X.comp[k](p);
    for (int i = 0; i < 3; ++i) ev.e[i] = frame_coefficients(i + 1, sp, p);
    ev.dlt = delta(sp, p);
    return ev;
}

// E_i(X_j) from precomputed jets.
double edir(const Eval& ev, int i, int j) {
    const auto& e = ev.e[i - 1];
    const auto& g = ev.X[j - 1].g;
    return e[0] * g[0] + e[1] * g[1] + e[2] * g[2];
}

Mat3 lie_derivative(const Eval& ev, const SpaceParams& sp, const FramePoint& p,
                    MixedTermForm form) {
    const double mu = sp.mu, lam = sp.lambda;
    const double X1 = ev.X[0].v, X2 = ev.X[1].v, X3 = ev.X[2].v;
    (void)X3;
    Mat3 L{};
    L[0][0] = 2.0 * (edir(ev, 1, 1) - 2.0 * mu * p.y * X2);
    L[1][1] = 2.0 * (edir(ev, 2, 2) - 2.0 * mu * p.x * X1);
    L[2][2] = -2.0 * edir(ev, 3, 3);
    const double second = form == MixedTermForm::Cross ? edir(ev, 2, 1) : edir(ev, 2, 2);
    L[0][1] = 2.0 * mu * p.x * X2 + 2.0 * mu * p.y * X1 + edir(ev, 1, 2) + second;
    L[0][2] = edir(ev, 3, 1) - edir(ev, 1, 3) - lam * X2;
    L[1][2] = lam * X1 - edir(ev, 2, 3) + edir(ev, 3, 2);
    L[1][0] = L[0][1];
    L[2][0] = L[0][2];
    L[2][1] = L[1][2];
    return L;
}

std::array<double, 6> pde_residual(const Eval& ev, double gamma,
                                   const SpaceParams& sp, const FramePoint& p) {
    const double mu = sp.mu, lam = sp.lambda, d = ev.dlt;
    const double x = p.x, y = p.y;
    const double X1 = ev.X[0].v, X2 = ev.X[1].v;
    auto dx = [&](int j) { return ev.X[j - 1].g[0]; };
    auto dy = [&](int j) { return ev.X[j - 1].g[1]; };
    auto dz = [&](int j) { return ev.X[j - 1].g[2]; };
    const double rho11 = 4.0 * mu + lam * lam;
    std::array<double, 6> r{};
    r[0] = 2.0 * mu * y * X2 - d * dx(1) + 0.5 * lam * y * dz(1) -
           0.5 * (rho11 - gamma);
    r[1] = 2.0 * mu * x * X2 + 2.0 * mu * y * X1 + d * dx(2) -
           0.5 * lam * y * dz(2) + d * dy(1) + 0.5 * lam * x * dz(1);
    r[2] = -lam * X2 - d * dx(3) + 0.5 * lam * y * dz(3) + dz(1);
    r[3] = 2.0 * mu * x * X1 - d * dy(2) - 0.5 * lam * x * dz(2) -
           0.5 * (rho11 - gamma);
    r[4] = lam * X1 - d * dy(3) - 0.5 * lam * x * dz(3) + dz(2);
    r[5] = dz(3) - 0.5 * gamma;
    return r;
}

// PDE line k <-> frame entry map (0-based index pairs) and scale factors.
constexpr int kEntryRow[6] = {0, 0, 0, 1, 1, 2};
constexpr int kEntryCol[6] = {0, 1, 2, 1, 2, 2};
constexpr double kLineScale[6] = {-2.0, 1.0, 1.0, -2.0, 1.0, -2.0};

ResidualReport aggregate(std::span<const FramePoint> points, int n_eq,
                         const std::function<void(const FramePoint&, double*)>& eval) {
    ResidualReport rep;
    rep.per_equation.assign(static_cast<std::size_t>(n_eq), 0.0);
    std::vector<double> buf(static_cast<std::size_t>(n_eq));
    for (const FramePoint& p : points) {
        eval(p, buf.data());
        double local = 0.0;
        for (int k = 0; k < n_eq; ++k) {
            const double a = std::abs(buf[static_cast<std::size_t>(k)]);
            rep.per_equation[static_cast<std::size_t>(k)] =
                std::max(rep.per_equation[static_cast<std::size_t>(k)], a);
            local = std::max(local, a);
        }
        if (local > rep.max_abs) {
            rep.max_abs = local;
            rep.worst_point = p;
        }
        ++rep.points_evaluated;
    }
    return rep;
}

}  // namespace

Mat3 lie_derivative_metric(const VectorField& X, const SpaceParams& sp,
                           const FramePoint& p, MixedTermForm form) {
    return lie_derivative(evaluate(X, sp, p), sp, p, form);
}

Mat3 soliton_residual_frame(const SolitonCandidate& c, const SpaceParams& sp,
                            const FramePoint& p) {
    Mat3 r = lie_derivative_metric(c.field, sp, p);
    const Mat3 rho = ricci(sp);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            r[i][j] += rho[i][j];
            if (i == j) r[i][j] -= c.gamma * kSignature[i];
        }
    return r;
}

std::array<double, 6> soliton_residual_pde(const SolitonCandidate& c,
                                           const SpaceParams& sp,
                                           const FramePoint& p) {
    return pde_residual(evaluate(c.field, sp, p), c.gamma, sp, p);
}

double equivalence_check(const SolitonCandidate& c, const SpaceParams& sp,
                         const FramePoint& p, MixedTermForm form) {
    const Eval ev = evaluate(c.field, sp, p);
    const Mat3 frame = [&] {
        Mat3 r = lie_derivative(ev, sp, p, form);
        const Mat3 rho = ricci(sp);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                r[i][j] += rho[i][j];
                if (i == j) r[i][j] -= c.gamma * kSignature[i];
            }
        return r;
    }();
    const auto lines = pde_residual(ev, c.gamma, sp, p);
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
        const double gap =
            std::abs(kLineScale[k] * lines[static_cast<std::size_t>(k)] -
                     frame[kEntryRow[k]][kEntryCol[k]]);
        worst = std::max(worst, gap);
    }
    return worst;
}

std::array<double, 2> constraint_residual(const ScalarField& A,
                                          const SpaceParams& sp,
                                          const FramePoint& p,
                                          ConstraintForm form) {
    const double lam = sp.lambda, mu = sp.mu;
    if (lam == 0.0)
        throw std::invalid_argument("constraint_residual requires lambda != 0");
    const Jet2 a = A(p);
    if (std::abs(a.g[2]) > 1e-12 || std::abs(a.hess(0, 2)) > 1e-12 ||
        std::abs(a.hess(1, 2)) > 1e-12 || std::abs(a.hess(2, 2)) > 1e-12)
        throw std::invalid_argument("constraint_residual: A must not depend on z");
    const double Delta = lam * mu * (2.0 * mu + 0.5 * lam * lam);
    const double d = delta(sp, p);
    const double x = p.x, y = p.y;
    if (form == ConstraintForm::OnA) {
        const double r1 = Delta * (x * x - y * y) +
                          d * (2.0 * mu * (x * a.g[1] + y * a.g[0]) +
                               d * a.hess(0, 1));
        const double r2 = 4.0 * Delta * x * y +
                          d * (4.0 * mu * (y * a.g[1] - x * a.g[0]) +
                               d * (a.hess(1, 1) - a.hess(0, 0)));
        return {r1, r2};
    }
    const Jet2 f = jet_delta(sp, p) * a;
    const double r1 = f.hess(0, 1) - Delta * (y * y - x * x) / d;
    const double r2 = (f.hess(0, 0) - f.hess(1, 1)) - 4.0 * Delta * x * y / d;
    return {r1, r2};
}

double obstruction_delta(const SpaceParams& sp) {
    if (sp.lambda == 0.0)
        throw std::invalid_argument("obstruction_delta requires lambda != 0");
    return sp.lambda * sp.mu * (2.0 * sp.mu + 0.5 * sp.lambda * sp.lambda);
}

ResidualReport verify_pde(const SolitonCandidate& c, const SpaceParams& sp,
                          std::span<const FramePoint> points) {
    return aggregate(points, 6, [&](const FramePoint& p, double* out) {
        const auto r = soliton_residual_pde(c, sp, p);
        for (int k = 0; k < 6; ++k) out[k] = r[static_cast<std::size_t>(k)];
    });
}

ResidualReport verify_frame(const SolitonCandidate& c, const SpaceParams& sp,
                            std::span<const FramePoint> points) {
    return aggregate(points, 6, [&](const FramePoint& p, double* out) {
        const Mat3 r = soliton_residual_frame(c, sp, p);
        for (int k = 0; k < 6; ++k) out[k] = r[kEntryRow[k]][kEntryCol[k]];
    });
}

ResidualReport killing_report(const VectorField& X, const SpaceParams& sp,
                              std::span<const FramePoint> points) {
    return aggregate(points, 6, [&](const FramePoint& p, double* out) {
        const Mat3 L = lie_derivative_metric(X, sp, p);
        for (int k = 0; k < 6; ++k) out[k] = L[kEntryRow[k]][kEntryCol[k]];
    });
}

}  // namespace lbcv
