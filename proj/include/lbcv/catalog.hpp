#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "lbcv/soliton.hpp"

namespace lbcv {

enum class SolitonKind { Shrinking, Steady, Expanding, None, FlatAnyGamma };

const char* to_string(SolitonKind k);

/// Classification of a parameter pair: soliton kind, the soliton constant
/// when it is determined, the matching case label and an optional caveat.
struct SolitonClass {
    SolitonKind kind = SolitonKind::None;
    std::optional<double> gamma;  // empty: none exists, or unconstrained
    std::string theorem_case;
    std::string caveat;
};

/// Family coefficients a1..a6 (the lambda != 0, mu = 0 family uses a1..a4).
struct CoefficientSet {
    std::array<double, 6> a{};
};

/// Thrown when a constructor is called with parameters outside its case.
struct WrongCaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerator form of the z-independent part of X3 in the steady family.
/// SumOfSquares (a1 (x^2 + y^2) + ...) is the form that satisfies the
/// soliton system; DifferenceOfSquares (a1 (x^2 - y^2) + ...) is kept so
/// tests can show it fails the residual oracle when a1 != 0.
enum class Case1bRadialForm { SumOfSquares, DifferenceOfSquares };

/// Shrinking family for lambda != 0, mu = 0:
///   X1 = (2 a1 y + a3)/lambda + (lambda^2/2) x
///   X2 = -(2 a1 x + a2)/lambda + (lambda^2/2) y
///   X3 = lambda^2 z + a1 (x^2+y^2) + a2 x + a3 y + a4
/// with gamma = 2 lambda^2 > 0. Uses a1..a4.
SolitonCandidate soliton_case1a(const SpaceParams& sp, const CoefficientSet& c);

/// Steady family for lambda != 0, mu = -lambda^2/4, gamma = 0:
///   X3 = A = (a1 (x^2+y^2) + a2 x + a3 y + a4) / delta
///   X1 = (delta/lambda) dy A + a5 sin(lambda z) - a6 cos(lambda z)
///   X2 = -(delta/lambda) dx A + a5 cos(lambda z) + a6 sin(lambda z)
/// These fields are also Killing.
SolitonCandidate soliton_case1b(const SpaceParams& sp, const CoefficientSet& c,
                                Case1bRadialForm form = Case1bRadialForm::SumOfSquares);

/// Family for lambda = 0, mu != 0: X = (0, 0, 2 mu z + shift) with
/// gamma = 4 mu (shrinking for mu > 0, expanding for mu < 0).
SolitonCandidate soliton_case2(const SpaceParams& sp, double shift);

/// Minkowski family (lambda = mu = 0), valid for every gamma:
///   X1 = (gamma/2) x - a1 y + a2 z + a3
///   X2 = a1 x + (gamma/2) y + a4 z + a5
///   X3 = a2 x + a4 y + (gamma/2) z + a6
SolitonCandidate soliton_case3(double gamma, const CoefficientSet& c);

/// Classifier over the (lambda, mu) plane. Case detection uses absolute
/// tolerance 1e-12 on the defining quantity; near-miss parameters fall into
/// the generic branch.
SolitonClass classify(const SpaceParams& sp);

/// Max |(L_X g)| of a candidate's field over a point set.
ResidualReport killing_check(const SolitonCandidate& c, const SpaceParams& sp,
                             std::span<const FramePoint> points);

}  // namespace lbcv
