#include "g2/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace g2 {

namespace {

// Moduli roots below this size make a prefactor ill-conditioned (split period matrix).
constexpr double kSplitFloor = 1e-4;

double table_scale(const ThetaTable& t) {
    double s = 0;
    for (auto x : t.v) s = std::max(s, std::abs(x));
    return s;
}

struct Ratios {
    const ThetaTable& t;
    cplx den;
    cplx operator()(Characteristic c) const {
        const cplx r = t[c] / den;
        return r * r;
    }
};

cplx checked_denominator(const ThetaTable& t) {
    const cplx d = t[ch("00;11")];
    if (!(std::abs(d) > 1e-10 * table_scale(t)))
        fail(ErrorKind::SingularDenominator, "theta[00;11] vanishes at the point");
    return d;
}

// Product of the three linear factors not in {i, j}.
cplx complement_factor(int i, int j, cplx x, const CurveSpec& c) {
    cplx g = 1.0;
    for (int k = 0; k < 5; ++k)
        if (k != i && k != j) g *= linear_factor(k, x, c);
    return g;
}

// pref * F(x1) F(x2) (s1/F(x1) - s2/F(x2))^2 / (x2-x1)^2 with s^2 = F G expanded out,
// finite when a factor vanishes at a branch point.
cplx sigma_form(int i, int j, cplx pref, const PointPair& p, const CurveSpec& c) {
    const cplx F1 = f_factor(i, j, p.x1, c), F2 = f_factor(i, j, p.x2, c);
    const cplx G1 = complement_factor(i, j, p.x1, c), G2 = complement_factor(i, j, p.x2, c);
    const cplx dx = p.x2 - p.x1;
    return pref * (G1 * F2 + G2 * F1 - 2.0 * p.sigma1 * p.sigma2) / (dx * dx);
}

}  // namespace

bool curve_is_generic(const CurveSpec& c, double tol) {
    const std::array<cplx, 5> pts{0.0, 1.0, c.k0_sq, c.k1_sq, c.k2_sq};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (std::abs(pts[i] - pts[j]) <= tol * (1.0 + std::abs(pts[i]) + std::abs(pts[j]))) return false;
    return true;
}

cplx f5(cplx x, const CurveSpec& c) {
    return x * (1.0 - x) * (1.0 - c.k0_sq * x) * (1.0 - c.k1_sq * x) * (1.0 - c.k2_sq * x);
}

cplx linear_factor(int i, cplx x, const CurveSpec& c) {
    switch (i) {
        case 0: return x;
        case 1: return 1.0 - x;
        case 2: return 1.0 - c.k0_sq * x;
        case 3: return 1.0 - c.k1_sq * x;
        case 4: return 1.0 - c.k2_sq * x;
        default: fail(ErrorKind::InvalidFactorIndex, "factor index " + std::to_string(i) + " not in 0..4");
    }
}

cplx f_factor(int i, int j, cplx x, const CurveSpec& c) {
    if (i < 0 || j > 4 || i >= j)
        fail(ErrorKind::InvalidFactorIndex,
             "need 0 <= i < j <= 4, got i=" + std::to_string(i) + " j=" + std::to_string(j));
    return linear_factor(i, x, c) * linear_factor(j, x, c);
}

SymmetricFunctions symmetric_functions(const ThetaTable& t, const ModuliSet& m) {
    const Ratios r{t, checked_denominator(t)};
    const cplx kkk = m.k0 * m.k1 * m.k2;
    SymmetricFunctions s;
    s.s2 = r(ch("10;11")) / kkk;
    s.one_minus = -r(ch("10;01")) * m.kp0 * m.kp1 * m.kp2 / kkk;
    s.s1 = 1.0 + s.s2 - s.one_minus;
    return s;
}

SymmetricFunctions symmetric_functions(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    return symmetric_functions(theta2_all(p, tau, ctrl), moduli_from_tau(tau, ctrl));
}

PointPair recover_pair(const ThetaTable& t, const ModuliSet& m) {
    const auto sf = symmetric_functions(t, m);
    const CurveSpec curve = CurveSpec::from(m);

    const cplx disc = std::sqrt(sf.s1 * sf.s1 - 4.0 * sf.s2);
    const cplx big = std::abs(sf.s1 + disc) >= std::abs(sf.s1 - disc) ? 0.5 * (sf.s1 + disc) : 0.5 * (sf.s1 - disc);
    const cplx small = big == 0.0 ? cplx{0.0} : sf.s2 / big;

    PointPair p;
    const bool big_first =
        big.real() > small.real() || (big.real() == small.real() && big.imag() >= small.imag());
    p.x1 = big_first ? big : small;
    p.x2 = big_first ? small : big;
    if (!(std::abs(p.x2 - p.x1) > 1e-8 * (1.0 + std::abs(p.x1) + std::abs(p.x2))))
        fail(ErrorKind::CoincidentPoints, "x1 and x2 coincide; sign class undefined");

    // relative class from the th[00;01] ratio
    const Ratios r{t, t[ch("00;11")]};
    const cplx target = r(ch("00;01"));
    const cplx pref6 = -1.0 / (m.kp0 * m.kp1 * m.kp2);
    const cplx s1 = std::sqrt(f5(p.x1, curve));
    const cplx s2 = std::sqrt(f5(p.x2, curve));
    p.sigma1 = s1;
    p.sigma2 = s2;
    const double keep = std::abs(sigma_form(0, 1, pref6, p, curve) - target);
    p.sigma2 = -s2;
    const double flip = std::abs(sigma_form(0, 1, pref6, p, curve) - target);
    p.sign_flipped = flip < keep;
    p.sigma2 = p.sign_flipped ? -s2 : s2;

    // overall sign from the unsquared relation
    //   s1/F01(x1) - s2/F01(x2) = -k0 k1 k2 (x2-x1) th[00;01] th[00;11] / (th[10;11] th[10;01])
    const cplx n1 = t[ch("10;11")], n2 = t[ch("10;01")];
    const cplx F1 = f_factor(0, 1, p.x1, curve), F2 = f_factor(0, 1, p.x2, curve);
    const double scale = table_scale(t);
    if (std::abs(n1) > 1e-12 * scale && std::abs(n2) > 1e-12 * scale && std::abs(F1) > 1e-14 &&
        std::abs(F2) > 1e-14) {
        const cplx lhs = p.sigma1 / F1 - p.sigma2 / F2;
        const cplx rhs =
            -m.k0 * m.k1 * m.k2 * (p.x2 - p.x1) * t[ch("00;01")] * t[ch("00;11")] / (n1 * n2);
        if (std::abs(lhs + rhs) < std::abs(lhs - rhs)) {
            p.sigma1 = -p.sigma1;
            p.sigma2 = -p.sigma2;
        }
        p.oriented = true;
    }
    return p;
}

PointPair recover_pair(Point2 pt, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    return recover_pair(theta2_all(pt, tau, ctrl), moduli_from_tau(tau, ctrl));
}

std::array<ParamResidual, 15> parameterization_residuals(const ThetaTable& t, const ModuliSet& m,
                                                         const PointPair& p) {
    const Ratios r{t, checked_denominator(t)};
    const CurveSpec c = CurveSpec::from(m);
    auto prod = [&](int i) { return linear_factor(i, p.x1, c) * linear_factor(i, p.x2, c); };
    auto ok = [](std::initializer_list<cplx> roots) {
        for (auto x : roots)
            if (!(std::abs(x) > kSplitFloor)) return false;
        return true;
    };

    std::array<ParamResidual, 15> out{};
    auto set = [&](int idx, Characteristic s, bool applicable, cplx rhs) {
        auto& e = out[idx - 1];
        e.index = idx;
        e.ch = s;
        e.applicable = applicable;
        e.lhs = r(s);
        e.rhs = rhs;
        e.value = applicable ? rel_residual(e.lhs, e.rhs) : 0.0;
    };
    const cplx kkk = m.k0 * m.k1 * m.k2;
    const cplx ppp = m.kp0 * m.kp1 * m.kp2;

    set(1, ch("10;11"), true, kkk * p.x1 * p.x2);
    set(2, ch("10;01"), true, -kkk / ppp * prod(1));
    {
        const bool a = ok({m.k01, m.k02});
        set(3, ch("01;01"), a, a ? -m.k1 * m.k2 / (m.kp0 * m.k01 * m.k02) * prod(2) : 0.0);
    }
    {
        const bool a = ok({m.k01, m.k12});
        set(4, ch("01;00"), a, a ? m.k0 * m.k2 / (m.kp1 * m.k01 * m.k12) * prod(3) : 0.0);
    }
    {
        const bool a = ok({m.k02, m.k12});
        set(5, ch("00;00"), a, a ? m.k0 * m.k1 / (m.kp2 * m.k02 * m.k12) * prod(4) : 0.0);
    }

    struct SigmaEq {
        int idx;
        Characteristic s;
        int i, j;
    };
    static constexpr std::array<SigmaEq, 10> eqs{{
        {6, ch("00;01"), 0, 1},
        {7, ch("01;11"), 3, 4},
        {8, ch("01;10"), 2, 4},
        {9, ch("00;10"), 2, 3},
        {10, ch("11;11"), 1, 2},
        {11, ch("11;10"), 1, 3},
        {12, ch("10;10"), 1, 4},
        {13, ch("11;01"), 0, 2},
        {14, ch("11;00"), 0, 3},
        {15, ch("10;00"), 0, 4},
    }};
    for (const auto& e : eqs) {
        bool a = true;
        cplx pref;
        switch (e.idx) {
            case 6: pref = -1.0 / ppp; break;
            case 7:
                a = ok({m.k01, m.k02});
                pref = m.k1 * m.k2 / (m.kp1 * m.kp2 * m.k01 * m.k02);
                break;
            case 8:
                a = ok({m.k01, m.k12});
                pref = -m.k0 * m.k2 / (m.kp0 * m.kp2 * m.k01 * m.k12);
                break;
            case 9:
                a = ok({m.k02, m.k12});
                pref = -m.k0 * m.k1 / (m.kp0 * m.kp1 * m.k02 * m.k12);
                break;
            case 10:
                a = ok({m.k01, m.k02});
                pref = m.k0 / (m.kp1 * m.kp2 * m.k01 * m.k02);
                break;
            case 11:
                a = ok({m.k01, m.k12});
                pref = -m.k1 / (m.kp0 * m.kp2 * m.k01 * m.k12);
                break;
            case 12:
                a = ok({m.k02, m.k12});
                pref = -m.k2 / (m.kp0 * m.kp1 * m.k02 * m.k12);
                break;
            case 13:
                a = ok({m.k01, m.k02});
                pref = -m.k0 / (m.kp0 * m.k01 * m.k02);
                break;
            case 14:
                a = ok({m.k01, m.k12});
                pref = m.k1 / (m.kp1 * m.k01 * m.k12);
                break;
            default:
                a = ok({m.k02, m.k12});
                pref = m.k2 / (m.kp2 * m.k02 * m.k12);
                break;
        }
        set(e.idx, e.s, a, a ? sigma_form(e.i, e.j, pref, p, c) : 0.0);
    }
    return out;
}

std::array<ParamResidual, 15> parameterization_residuals(Point2 pt, const PeriodMatrix& tau,
                                                         const SeriesControl& ctrl) {
    const auto t = theta2_all(pt, tau, ctrl);
    const auto m = moduli_from_tau(tau, ctrl);
    return parameterization_residuals(t, m, recover_pair(t, m));
}

std::array<double, 6> pencil_identity_residuals(const ThetaTable& t, const ModuliSet& m, const PointPair& p) {
    std::array<double, 6> out{};
    const std::array<cplx, 3> ksq{m.k0_sq, m.k1_sq, m.k2_sq};
    for (int i = 0; i < 3; ++i) {
        const cplx k = ksq[i];
        const cplx a = k * p.x1 * p.x2;
        const cplx b = -k / (1.0 - k) * (1.0 - p.x1) * (1.0 - p.x2);
        const cplx c = 1.0 / (1.0 - k) * (1.0 - k * p.x1) * (1.0 - k * p.x2);
        out[i] = rel_residual(1.0, a + b + c, {a, b, c});
    }
    const Ratios w{t, checked_denominator(t)};
    auto q = [&](const char(&s)[6]) {
        const cplx n = m.nulls[Characteristic::parse(s)];
        return n * n;
    };
    auto three = [&](cplx d, cplx a, cplx b, cplx c) {
        a /= d;
        b /= d;
        c /= d;
        return rel_residual(1.0, a + b + c, {a, b, c});
    };
    out[3] = three(q("10;01"), q("00;01") * w(ch("10;11")), q("00;11") * w(ch("10;01")),
                   -q("11;11") * w(ch("01;01")));
    out[4] = three(q("10;00"), q("00;00") * w(ch("10;11")), q("00;10") * w(ch("10;01")),
                   q("11;11") * w(ch("01;00")));
    out[5] = three(q("11;00"), q("01;00") * w(ch("10;11")), q("01;10") * w(ch("10;01")),
                   q("11;11") * w(ch("00;00")));
    return out;
}

}  // namespace g2
