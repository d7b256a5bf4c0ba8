#pragma once

#include <array>
#include <string>

#include "g2/moduli.hpp"

namespace g2 {

// Rosenhain quintic x(1-x)(1-k0^2 x)(1-k1^2 x)(1-k2^2 x).
struct CurveSpec {
    cplx k0_sq, k1_sq, k2_sq;
    static CurveSpec from(const ModuliSet& ms) { return {ms.k0_sq, ms.k1_sq, ms.k2_sq}; }
};

// Branch data pairwise distinct and away from 0 and 1.
bool curve_is_generic(const CurveSpec& c, double tol = 1e-12);

cplx f5(cplx x, const CurveSpec& c);

// Linear factors: 0 -> x, 1 -> 1-x, 2 -> 1-k0^2 x, 3 -> 1-k1^2 x, 4 -> 1-k2^2 x.
cplx linear_factor(int i, cplx x, const CurveSpec& c);
// F_ij(x), the product of factors i and j; requires 0 <= i < j <= 4.
cplx f_factor(int i, int j, cplx x, const CurveSpec& c);

struct SymmetricFunctions {
    cplx s1, s2;
    cplx one_minus;  // (1-x1)(1-x2)
};

SymmetricFunctions symmetric_functions(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl = {});
SymmetricFunctions symmetric_functions(const ThetaTable& at_point, const ModuliSet& ms);

struct PointPair {
    cplx x1, x2;
    cplx sigma1, sigma2;     // square roots of f5(x1), f5(x2)
    bool sign_flipped = false;  // sigma2 is minus the principal root relative to sigma1
    bool oriented = false;      // overall sign fixed by the unsquared theta relation
};

PointPair recover_pair(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl = {});
PointPair recover_pair(const ThetaTable& at_point, const ModuliSet& ms);

struct ParamResidual {
    int index = 0;  // 1..15
    Characteristic ch;
    double value = 0;
    bool applicable = true;  // false when a prefactor modulus vanishes (split period matrix)
    cplx lhs, rhs;
};

std::array<ParamResidual, 15> parameterization_residuals(Point2 p, const PeriodMatrix& tau,
                                                         const SeriesControl& ctrl = {});
std::array<ParamResidual, 15> parameterization_residuals(const ThetaTable& at_point, const ModuliSet& ms,
                                                         const PointPair& pair);

// For i = 0,1,2: the polynomial identity
//   1 = k_i^2 x1 x2 - k_i^2/(1-k_i^2) (1-x1)(1-x2) + 1/(1-k_i^2) (1-k_i^2 x1)(1-k_i^2 x2)
// at the recovered pair (first three), and its theta-function counterpart at the point (last three).
std::array<double, 6> pencil_identity_residuals(const ThetaTable& at_point, const ModuliSet& ms,
                                                const PointPair& pair);

}  // namespace g2
