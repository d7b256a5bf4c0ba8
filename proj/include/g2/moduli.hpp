#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2/theta.hpp"

namespace g2 {

struct ModuliSet {
    cplx k0_sq, k1_sq, k2_sq;
    cplx kp0_sq, kp1_sq, kp2_sq;
    cplx k01_sq, k02_sq, k12_sq;
    // principal roots
    cplx k0, k1, k2, kp0, kp1, kp2, k01, k02, k12;

    // Theta nulls the moduli were built from (empty when built from squares).
    ThetaTable nulls{};
    double null_scale = 1.0;

    // From k0^2, k1^2, k2^2 alone: complements and differences by arithmetic.
    static ModuliSet from_squares(cplx k0_sq, cplx k1_sq, cplx k2_sq);
    void fill_roots();
};

struct LabeledResidual {
    std::string label;
    double value = 0;
};

ModuliSet moduli_from_tau(const PeriodMatrix& tau, const SeriesControl& ctrl = {});
ModuliSet moduli_from_nulls(const ThetaTable& nulls);

struct NullRatio {
    Characteristic ch;
    cplx value;  // th[ch](0)^2 / th[00;00](0)^2 as a product of moduli roots
};

std::array<NullRatio, 9> null_ratios_from_moduli(const ModuliSet& ms);

struct NullRatioCheck {
    Characteristic ch;
    cplx formula, direct;
    int sign = 1;  // formula * sign matches direct
    double residual = 0;
};

// Compares each moduli product against the directly computed null ratio and
// reports which sign of the product matches.
std::array<NullRatioCheck, 9> null_ratio_check(const ModuliSet& ms);

std::vector<LabeledResidual> moduli_consistency_residuals(const PeriodMatrix& tau, const SeriesControl& ctrl = {});
std::vector<LabeledResidual> moduli_consistency_residuals(const ModuliSet& ms);

}  // namespace g2
