#pragma once

#include <array>

#include "g2/theta.hpp"

namespace g2 {

using Quadruple = std::array<Point2, 4>;

enum class ProductVariant { M, M1, M2, M3 };

// Apply the symmetric orthogonal 4x4 matrix 1/2[[1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],[1,-1,-1,1]]
// to the u and v components separately. It is its own inverse.
Quadruple riemann_transform(const Quadruple& q);

// M   = prod th[00;00] + prod th[01;00]
// M1  = prod th[10;00] + prod th[11;00]
// M2  = prod th[10;10] + prod th[11;10]
// M3  = prod th[00;10] + prod th[01;10]
cplx product_m(ProductVariant variant, const Quadruple& q, const PeriodMatrix& tau,
               const SeriesControl& ctrl = {});
std::array<cplx, 4> products_m(const Quadruple& q, const PeriodMatrix& tau, const SeriesControl& ctrl = {});

// Residuals of 2M = Mt + Mt1 + Mt2 + Mt3 and the three sibling relations (first four),
// then of the inverse relations 2Mt = M + M1 + M2 + M3 ... (last four). Mt* are products
// at the transformed quadruple.
std::array<double, 8> riemann_relation_residuals(const Quadruple& q, const PeriodMatrix& tau,
                                                 const SeriesControl& ctrl = {});

// Squared-theta identities at (u,v):
//  th00;00(0)^2 th00;00^2 = th00;10(0)^2 th00;10^2 + th10;00(0)^2 th10;00^2 + th11;11(0)^2 th11;11^2
//  th01;00(0)^2 th00;00^2 = th01;10(0)^2 th00;10^2 + th11;00(0)^2 th10;00^2 + th11;11(0)^2 th10;11^2
//  th00;01(0)^2 th00;00^2 = th00;11(0)^2 th00;10^2 + th10;01(0)^2 th10;00^2 - th11;11(0)^2 th11;10^2
std::array<double, 3> fundamental_identity_residuals(Point2 p, const PeriodMatrix& tau,
                                                     const SeriesControl& ctrl = {});
std::array<double, 3> fundamental_identity_residuals(const ThetaTable& at_point, const ThetaTable& nulls);

}  // namespace g2
