#pragma once

#include <array>
#include <functional>
#include <vector>

#include "g2/moduli.hpp"

namespace g2 {

struct Genus1Characteristic {
    int a = 0, b = 0;
};

struct EllipticModulus {
    cplx k_sq, kp_sq, k, kp;
};

int truncation_radius1(cplx tau, cplx z, const SeriesControl& ctrl = {});
cplx theta1(Genus1Characteristic c, cplx z, cplx tau, const SeriesControl& ctrl = {});

// Genus-1 nulls th[0;0], th[0;1], th[1;0] at z = 0 give k = th10^2/th00^2, k' = th01^2/th00^2.
EllipticModulus elliptic_modulus(cplx tau, const SeriesControl& ctrl = {});

struct JacobiValues {
    cplx sn, cn, dn;
    EllipticModulus modulus;
};

// Theta quotients in the z normalization; the elliptic argument is 2Kz with K = pi/2 th00(0)^2.
JacobiValues jacobi_functions(cplx z, cplx tau, const SeriesControl& ctrl = {});

// Three squared-theta identities at z and the quartic null identity.
std::array<double, 4> elliptic_identity_residuals(cplx z, cplx tau, const SeriesControl& ctrl = {});

// max over the 16 characteristics of the relative gap between the genus-2 value at
// tau12 = 0 and the product of genus-1 values.
double splitting_residual(Point2 p, cplx tau1, cplx tau2, const SeriesControl& ctrl = {});

// th00(0) th11(u) / (th10(0) th01(u)) on tau1: the free member of the split pair is its square.
cplx split_coordinate(cplx u, cplx tau1, const SeriesControl& ctrl = {});

std::vector<LabeledResidual> degenerate_inversion_residuals(Point2 p, cplx tau1, cplx tau2,
                                                            const SeriesControl& ctrl = {});

// (dx/du)^2 = (1-x^2)(1-k^2 x^2) with x = split_coordinate, u = 2Kz, central difference of step h in z.
double sn_ode_residual(cplx z, cplx tau, const SeriesControl& ctrl, double h);

// Tanh-sinh rule on [a, b]. The integrand receives (x, x - a, b - x) so endpoint
// distances stay accurate. Throws QuadratureNonconvergence past max_level.
double tanh_sinh(const std::function<double(double, double, double)>& f, double a, double b, double tol = 1e-12,
                 int max_level = 12);

struct CompleteIntegrals {
    double K = 0, Kp = 0;
};

CompleteIntegrals complete_integrals(double k, double kp);

// Residuals of tau = i K'/K and th00(0)^2 = 2K/pi for purely imaginary tau.
std::array<double, 2> complete_integral_residuals(cplx tau, const SeriesControl& ctrl = {});

}  // namespace g2
