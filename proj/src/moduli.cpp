#include "g2/moduli.hpp"

#include <algorithm>
#include <cmath>

namespace g2 {

namespace {

struct NullSquares {
    const ThetaTable& n;
    cplx operator()(Characteristic c) const { return n[c] * n[c]; }
};

}  // namespace

void ModuliSet::fill_roots() {
    k0 = std::sqrt(k0_sq);
    k1 = std::sqrt(k1_sq);
    k2 = std::sqrt(k2_sq);
    kp0 = std::sqrt(kp0_sq);
    kp1 = std::sqrt(kp1_sq);
    kp2 = std::sqrt(kp2_sq);
    k01 = std::sqrt(k01_sq);
    k02 = std::sqrt(k02_sq);
    k12 = std::sqrt(k12_sq);
}

ModuliSet ModuliSet::from_squares(cplx k0_sq, cplx k1_sq, cplx k2_sq) {
    ModuliSet m;
    m.k0_sq = k0_sq;
    m.k1_sq = k1_sq;
    m.k2_sq = k2_sq;
    m.kp0_sq = 1.0 - k0_sq;
    m.kp1_sq = 1.0 - k1_sq;
    m.kp2_sq = 1.0 - k2_sq;
    m.k01_sq = k0_sq - k1_sq;
    m.k02_sq = k0_sq - k2_sq;
    m.k12_sq = k1_sq - k2_sq;
    m.fill_roots();
    return m;
}

ModuliSet moduli_from_nulls(const ThetaTable& nulls) {
    double scale = 0;
    for (auto c : even_characteristics()) scale = std::max(scale, std::abs(nulls[c]));
    for (auto c : {ch("00;00"), ch("01;00"), ch("00;01"), ch("10;01")}) {
        if (!(std::abs(nulls[c]) > 1e-10 * scale))
            fail(ErrorKind::DegenerateTau, "theta null [" + c.str() + "] vanishes");
    }
    const NullSquares q{nulls};
    ModuliSet m;
    m.nulls = nulls;
    m.null_scale = scale;
    m.k0_sq = q(ch("10;00")) * q(ch("11;00")) / (q(ch("00;00")) * q(ch("01;00")));
    m.k1_sq = q(ch("10;01")) * q(ch("11;00")) / (q(ch("00;01")) * q(ch("01;00")));
    m.k2_sq = q(ch("10;01")) * q(ch("10;00")) / (q(ch("00;01")) * q(ch("00;00")));
    m.kp0_sq = q(ch("00;10")) * q(ch("01;10")) / (q(ch("00;00")) * q(ch("01;00")));
    m.kp1_sq = q(ch("00;11")) * q(ch("01;10")) / (q(ch("00;01")) * q(ch("01;00")));
    m.kp2_sq = q(ch("00;11")) * q(ch("00;10")) / (q(ch("00;01")) * q(ch("00;00")));
    m.k01_sq = q(ch("11;00")) * q(ch("11;11")) * q(ch("01;10")) / (q(ch("01;00")) * q(ch("00;00")) * q(ch("00;01")));
    m.k02_sq = q(ch("10;00")) * q(ch("11;11")) * q(ch("00;10")) / (q(ch("00;00")) * q(ch("01;00")) * q(ch("00;01")));
    m.k12_sq = q(ch("10;01")) * q(ch("11;11")) * q(ch("00;11")) / (q(ch("00;01")) * q(ch("01;00")) * q(ch("00;00")));
    m.fill_roots();
    return m;
}

ModuliSet moduli_from_tau(const PeriodMatrix& tau, const SeriesControl& ctrl) {
    return moduli_from_nulls(theta2_all({}, tau, ctrl));
}

std::array<NullRatio, 9> null_ratios_from_moduli(const ModuliSet& m) {
    auto nonzero = [](cplx x, const char* name) {
        if (!(std::abs(x) > 1e-12)) fail(ErrorKind::DivisionByZeroModulus, std::string(name) + " vanishes");
    };
    nonzero(m.k1, "k1");
    nonzero(m.kp1, "k'1");
    nonzero(m.k02, "k02");
    return {{
        {ch("00;11"), m.k0 * m.kp2 * m.k12 / (m.k1 * m.k02)},
        {ch("01;10"), m.kp0 * m.k2 * m.k01 / (m.k1 * m.k02)},
        {ch("00;10"), m.kp0 * m.kp2 / m.kp1},
        {ch("11;00"), m.k0 * m.kp2 * m.k01 / (m.kp1 * m.k02)},
        {ch("10;01"), m.kp0 * m.k2 * m.k12 / (m.kp1 * m.k02)},
        {ch("10;00"), m.k0 * m.k2 / m.k1},
        {ch("11;11"), m.k01 * m.k12 / (m.k1 * m.kp1)},
        {ch("00;01"), m.k0 * m.kp0 * m.k12 / (m.k1 * m.kp1 * m.k02)},
        {ch("01;00"), m.k2 * m.kp2 * m.k01 / (m.k1 * m.kp1 * m.k02)},
    }};
}

std::array<NullRatioCheck, 9> null_ratio_check(const ModuliSet& m) {
    const auto ratios = null_ratios_from_moduli(m);
    const NullSquares q{m.nulls};
    const cplx base = q(ch("00;00"));
    std::array<NullRatioCheck, 9> out{};
    for (int i = 0; i < 9; ++i) {
        auto& r = out[i];
        r.ch = ratios[i].ch;
        r.formula = ratios[i].value;
        r.direct = q(r.ch) / base;
        r.sign = std::abs(r.formula - r.direct) <= std::abs(r.formula + r.direct) ? 1 : -1;
        r.residual = rel_residual(double(r.sign) * r.formula, r.direct);
    }
    return out;
}

std::vector<LabeledResidual> moduli_consistency_residuals(const ModuliSet& m) {
    const NullSquares q{m.nulls};
    auto Q = [&](const char(&s)[6]) { return q(Characteristic::parse(s)); };
    std::vector<LabeledResidual> out;

    // k_i^2/(1-k_i^2) from the first form against the complementary-null form
    {
        const cplx r0 = Q("10;00") * Q("11;00") / (Q("00;10") * Q("01;10"));
        const cplx r1 = Q("10;01") * Q("11;00") / (Q("00;11") * Q("01;10"));
        const cplx r2 = Q("10;01") * Q("10;00") / (Q("00;11") * Q("00;10"));
        out.push_back({"k0^2/(1-k0^2) two forms", rel_residual(m.k0_sq / (1.0 - m.k0_sq), r0)});
        out.push_back({"k1^2/(1-k1^2) two forms", rel_residual(m.k1_sq / (1.0 - m.k1_sq), r1)});
        out.push_back({"k2^2/(1-k2^2) two forms", rel_residual(m.k2_sq / (1.0 - m.k2_sq), r2)});
    }
    // sum rules 1 = A - B
    {
        auto rule = [&](cplx a, cplx b) { return rel_residual(1.0, a - b, {a, b}); };
        const cplx d0 = Q("10;00") * Q("11;00");
        out.push_back({"sum rule 0", rule(Q("00;00") * Q("01;00") / d0, Q("00;10") * Q("01;10") / d0)});
        const cplx d1 = Q("10;01") * Q("11;00");
        out.push_back({"sum rule 1", rule(Q("00;01") * Q("01;00") / d1, Q("00;11") * Q("01;10") / d1)});
        const cplx d2 = Q("10;01") * Q("10;00");
        out.push_back({"sum rule 2", rule(Q("00;01") * Q("00;00") / d2, Q("00;11") * Q("00;10") / d2)});
    }
    // difference forms of k_ij^2 against the product forms and against k_i^2 - k_j^2
    {
        const cplx m01 = (Q("11;00") / Q("01;00")) * (Q("10;00") * Q("00;01") - Q("00;00") * Q("10;01")) /
                         (Q("00;00") * Q("00;01"));
        const cplx m02 = (Q("10;00") / Q("00;00")) * (Q("11;00") * Q("00;01") - Q("01;00") * Q("10;01")) /
                         (Q("01;00") * Q("00;01"));
        const cplx m12 = (Q("10;01") / Q("00;01")) * (Q("00;00") * Q("11;00") - Q("10;00") * Q("01;00")) /
                         (Q("01;00") * Q("00;00"));
        out.push_back({"k01^2 difference form", rel_residual(m01, m.k01_sq)});
        out.push_back({"k02^2 difference form", rel_residual(m02, m.k02_sq)});
        out.push_back({"k12^2 difference form", rel_residual(m12, m.k12_sq)});
        out.push_back({"k01^2 = k0^2 - k1^2", rel_residual(m.k01_sq, m.k0_sq - m.k1_sq, {m.k0_sq, m.k1_sq})});
        out.push_back({"k02^2 = k0^2 - k2^2", rel_residual(m.k02_sq, m.k0_sq - m.k2_sq, {m.k0_sq, m.k2_sq})});
        out.push_back({"k12^2 = k1^2 - k2^2", rel_residual(m.k12_sq, m.k1_sq - m.k2_sq, {m.k1_sq, m.k2_sq})});
    }
    out.push_back({"k'0^2 = 1 - k0^2", rel_residual(m.kp0_sq, 1.0 - m.k0_sq, {m.k0_sq})});
    out.push_back({"k'1^2 = 1 - k1^2", rel_residual(m.kp1_sq, 1.0 - m.k1_sq, {m.k1_sq})});
    out.push_back({"k'2^2 = 1 - k2^2", rel_residual(m.kp2_sq, 1.0 - m.k2_sq, {m.k2_sq})});
    out.push_back({"k01^2 + k12^2 = k02^2", rel_residual(m.k01_sq + m.k12_sq, m.k02_sq, {m.k01_sq, m.k12_sq})});
    return out;
}

std::vector<LabeledResidual> moduli_consistency_residuals(const PeriodMatrix& tau, const SeriesControl& ctrl) {
    return moduli_consistency_residuals(moduli_from_tau(tau, ctrl));
}

}  // namespace g2
