#pragma once

#include <array>

#include "g2/inversion.hpp"

namespace g2 {

struct FlowConstants {
    cplx a_u, b_u, c_v, d_v;
    cplx a_tilde, b_tilde;  // second route to a_u, b_u through th[00;00](0), th[01;00](0)
    cplx A, B, C, D;
    cplx P, Q, R, S;
    cplx det;
};

FlowConstants flow_constants(const PeriodMatrix& tau, const SeriesControl& ctrl = {});
FlowConstants flow_constants(const ModuliSet& ms, const ThetaJetTable& null_jets);

// Central differences of the tracked pair along real u and real v.
struct PairDerivatives {
    PointPair center;
    cplx dx1_du, dx2_du, dx1_dv, dx2_dv;
};

PairDerivatives pair_derivatives(Point2 p, const PeriodMatrix& tau, const ModuliSet& ms, const SeriesControl& ctrl,
                                 double h);

// dx1/du = (A + B x2) s1/(x2-x1), dx2/du = -(A + B x1) s2/(x2-x1), and the C, D analogues in v.
// Order: dx1/du, dx2/du, dx1/dv, dx2/dv.
std::array<double, 4> flow_residuals(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl, double h);
std::array<double, 4> flow_residuals(const PairDerivatives& pd, const FlowConstants& fc, const CurveSpec& c);

// du = sum (P + Q x_i) dx_i / s_i, dv = sum (R + S x_i) dx_i / s_i checked on steps (h,0) and (0,h).
std::array<double, 2> abelian_differential_residuals(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl,
                                                     double h);
std::array<double, 2> abelian_differential_residuals(const PairDerivatives& pd, const FlowConstants& fc);

// Four-point addition formulas at (p+q, p-q).
std::array<double, 2> addition_formula_residuals(Point2 p, Point2 q, const PeriodMatrix& tau,
                                                 const SeriesControl& ctrl = {});
std::array<double, 2> addition_formula_residuals(const ThetaTable& plus, const ThetaTable& minus,
                                                 const ThetaTable& at_p, const ThetaTable& at_q,
                                                 const ThetaTable& nulls);

// Derivatives of th[10;11]/th[00;11] and th[10;01]/th[00;11] in u and v against closed forms.
// Order: first quotient in u, in v, second quotient in u, in v.
std::array<double, 4> derivative_formula_residuals(Point2 p, const PeriodMatrix& tau,
                                                   const SeriesControl& ctrl = {});
std::array<double, 4> derivative_formula_residuals(const ThetaJetTable& at_point, const ThetaJetTable& null_jets);

}  // namespace g2
