#include "g2/flow.hpp"

#include <algorithm>
#include <cmath>

namespace g2 {

FlowConstants flow_constants(const ModuliSet& m, const ThetaJetTable& nj) {
    for (cplx x : {m.kp0, m.kp1, m.kp2, m.k01, m.k02, m.k12}) {
        if (!(std::abs(x) > 1e-6)) fail(ErrorKind::DegenerateTau, "moduli roots vanish (split period matrix)");
    }
    auto N = [&](Characteristic c) { return nj[c].value; };
    const ThetaJet& j1 = nj[ch("10;10")];
    const ThetaJet& j2 = nj[ch("11;10")];
    const cplx den = N(ch("10;01")) * N(ch("00;01"));
    const cplx den_t = N(ch("10;01")) * N(ch("00;11"));
    const cplx pa = 2.0 / (m.kp2 * m.k02 * m.k12) * N(ch("00;10")) / den;
    const cplx pb = 2.0 / (m.kp1 * m.k01 * m.k12) * N(ch("01;10")) / den;

    FlowConstants f;
    f.a_u = pa * j1.du;
    f.b_u = pb * j2.du;
    f.c_v = pa * j1.dv;
    f.d_v = pb * j2.dv;
    f.a_tilde = 2.0 / (m.k02 * m.k12) * N(ch("00;00")) * j1.du / den_t;
    f.b_tilde = 2.0 / (m.k01 * m.k12) * N(ch("01;00")) * j2.du / den_t;
    if (std::abs(f.a_u - f.a_tilde) > 1e-8 * std::abs(f.a_u) || std::abs(f.b_u - f.b_tilde) > 1e-8 * std::abs(f.b_u))
        fail(ErrorKind::TildeMismatch, "two routes to the flow constants disagree");

    f.A = -f.a_u + f.b_u;
    f.B = f.a_u * m.k2_sq - f.b_u * m.k1_sq;
    f.C = -f.c_v + f.d_v;
    f.D = f.c_v * m.k2_sq - f.d_v * m.k1_sq;
    f.det = f.A * f.D - f.B * f.C;
    const double scale = std::max(std::abs(f.A * f.D), std::abs(f.B * f.C));
    if (!(std::abs(f.det) > 1e-12 * scale)) fail(ErrorKind::SingularJacobian, "AD - BC vanishes");
    f.P = -f.C / f.det;
    f.Q = -f.D / f.det;
    f.R = f.A / f.det;
    f.S = f.B / f.det;
    return f;
}

FlowConstants flow_constants(const PeriodMatrix& tau, const SeriesControl& ctrl) {
    const auto nj = theta2_jet_all({}, tau, ctrl);
    ThetaTable nulls;
    for (int i = 0; i < 16; ++i) nulls.v[i] = nj.v[i].value;
    return flow_constants(moduli_from_nulls(nulls), nj);
}

PairDerivatives pair_derivatives(Point2 p, const PeriodMatrix& tau, const ModuliSet& m, const SeriesControl& ctrl,
                                 double h) {
    PairDerivatives d;
    d.center = recover_pair(theta2_all(p, tau, ctrl), m);
    const cplx x1 = d.center.x1, x2 = d.center.x2;
    auto tracked = [&](Point2 q) -> std::pair<cplx, cplx> {
        PointPair r;
        try {
            r = recover_pair(theta2_all(q, tau, ctrl), m);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SingularDenominator || e.kind() == ErrorKind::CoincidentPoints)
                fail(ErrorKind::StencilCrossesDivisor, e.what());
            throw;
        }
        if (std::abs(r.x1 - x1) + std::abs(r.x2 - x2) <= std::abs(r.x1 - x2) + std::abs(r.x2 - x1))
            return {r.x1, r.x2};
        return {r.x2, r.x1};
    };
    const auto up = tracked({p.u + h, p.v}), um = tracked({p.u - h, p.v});
    const auto vp = tracked({p.u, p.v + h}), vm = tracked({p.u, p.v - h});
    d.dx1_du = (up.first - um.first) / (2 * h);
    d.dx2_du = (up.second - um.second) / (2 * h);
    d.dx1_dv = (vp.first - vm.first) / (2 * h);
    d.dx2_dv = (vp.second - vm.second) / (2 * h);
    return d;
}

std::array<double, 4> flow_residuals(const PairDerivatives& pd, const FlowConstants& f, const CurveSpec&) {
    const auto& c = pd.center;
    const cplx dx = c.x2 - c.x1;
    const cplx p1u = (f.A + f.B * c.x2) * c.sigma1 / dx;
    const cplx p2u = -(f.A + f.B * c.x1) * c.sigma2 / dx;
    const cplx p1v = (f.C + f.D * c.x2) * c.sigma1 / dx;
    const cplx p2v = -(f.C + f.D * c.x1) * c.sigma2 / dx;
    return {rel_residual(pd.dx1_du, p1u), rel_residual(pd.dx2_du, p2u), rel_residual(pd.dx1_dv, p1v),
            rel_residual(pd.dx2_dv, p2v)};
}

std::array<double, 4> flow_residuals(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl, double h) {
    const auto nj = theta2_jet_all({}, tau, ctrl);
    ThetaTable nulls;
    for (int i = 0; i < 16; ++i) nulls.v[i] = nj.v[i].value;
    const auto m = moduli_from_nulls(nulls);
    const auto f = flow_constants(m, nj);
    return flow_residuals(pair_derivatives(p, tau, m, ctrl, h), f, CurveSpec::from(m));
}

std::array<double, 2> abelian_differential_residuals(const PairDerivatives& pd, const FlowConstants& f) {
    const auto& c = pd.center;
    auto form = [&](cplx P, cplx Q, cplx d1, cplx d2) {
        const cplx t1 = (P + Q * c.x1) * d1 / c.sigma1;
        const cplx t2 = (P + Q * c.x2) * d2 / c.sigma2;
        return std::pair{t1, t2};
    };
    auto res = [](std::pair<cplx, cplx> t, double expect) {
        return rel_residual(t.first + t.second, expect, {t.first, t.second});
    };
    const auto du_u = form(f.P, f.Q, pd.dx1_du, pd.dx2_du);
    const auto du_v = form(f.P, f.Q, pd.dx1_dv, pd.dx2_dv);
    const auto dv_u = form(f.R, f.S, pd.dx1_du, pd.dx2_du);
    const auto dv_v = form(f.R, f.S, pd.dx1_dv, pd.dx2_dv);
    return {std::max(res(du_u, 1.0), res(du_v, 0.0)), std::max(res(dv_u, 0.0), res(dv_v, 1.0))};
}

std::array<double, 2> abelian_differential_residuals(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl,
                                                     double h) {
    const auto nj = theta2_jet_all({}, tau, ctrl);
    ThetaTable nulls;
    for (int i = 0; i < 16; ++i) nulls.v[i] = nj.v[i].value;
    const auto m = moduli_from_nulls(nulls);
    return abelian_differential_residuals(pair_derivatives(p, tau, m, ctrl, h), flow_constants(m, nj));
}

std::array<double, 2> addition_formula_residuals(const ThetaTable& s, const ThetaTable& d, const ThetaTable& p,
                                                 const ThetaTable& q, const ThetaTable& n) {
    std::array<double, 2> out{};
    {
        const cplx l = n[ch("10;01")] * n[ch("00;01")] *
                       (s[ch("10;11")] * d[ch("00;11")] - s[ch("00;11")] * d[ch("10;11")]);
        const cplx t1 = 2.0 * p[ch("10;00")] * p[ch("00;00")] * q[ch("00;10")] * q[ch("10;10")];
        const cplx t2 = 2.0 * p[ch("11;00")] * p[ch("01;00")] * q[ch("11;10")] * q[ch("01;10")];
        out[0] = rel_residual(l, t1 - t2, {t1, t2});
    }
    {
        const cplx l = n[ch("10;01")] * n[ch("00;11")] *
                       (s[ch("10;01")] * d[ch("00;11")] - s[ch("00;11")] * d[ch("10;01")]);
        const cplx t1 = 2.0 * p[ch("00;00")] * p[ch("10;10")] * q[ch("00;00")] * q[ch("10;10")];
        const cplx t2 = 2.0 * p[ch("01;00")] * p[ch("11;10")] * q[ch("01;00")] * q[ch("11;10")];
        out[1] = rel_residual(l, t2 - t1, {t1, t2});
    }
    return out;
}

std::array<double, 2> addition_formula_residuals(Point2 p, Point2 q, const PeriodMatrix& tau,
                                                 const SeriesControl& ctrl) {
    return addition_formula_residuals(theta2_all(p + q, tau, ctrl), theta2_all(p - q, tau, ctrl),
                                      theta2_all(p, tau, ctrl), theta2_all(q, tau, ctrl),
                                      theta2_all({}, tau, ctrl));
}

std::array<double, 4> derivative_formula_residuals(const ThetaJetTable& t, const ThetaJetTable& n) {
    const ThetaJet& D = t[ch("00;11")];
    auto val = [&](Characteristic c) { return t[c].value; };
    auto nul = [&](Characteristic c) { return n[c].value; };
    const cplx d2 = D.value * D.value;
    std::array<double, 4> out{};
    for (int dir = 0; dir < 2; ++dir) {
        auto der = [&](const ThetaJet& j) { return dir == 0 ? j.du : j.dv; };
        const cplx g1 = der(n[ch("10;10")]), g2 = der(n[ch("11;10")]);
        {
            const ThetaJet& N = t[ch("10;11")];
            const cplx lhs = (der(N) * D.value - N.value * der(D)) / d2;
            const cplx pre = nul(ch("10;01")) * nul(ch("00;01")) * d2;
            const cplx t1 = nul(ch("00;10")) * g1 * val(ch("10;00")) * val(ch("00;00")) / pre;
            const cplx t2 = nul(ch("01;10")) * g2 * val(ch("11;00")) * val(ch("01;00")) / pre;
            out[dir] = rel_residual(lhs, t1 - t2, {t1, t2});
        }
        {
            const ThetaJet& N = t[ch("10;01")];
            const cplx lhs = (der(N) * D.value - N.value * der(D)) / d2;
            const cplx pre = nul(ch("10;01")) * nul(ch("00;11")) * d2;
            const cplx t1 = nul(ch("00;00")) * g1 * val(ch("00;00")) * val(ch("10;10")) / pre;
            const cplx t2 = nul(ch("01;00")) * g2 * val(ch("01;00")) * val(ch("11;10")) / pre;
            out[2 + dir] = rel_residual(lhs, t2 - t1, {t1, t2});
        }
    }
    return out;
}

std::array<double, 4> derivative_formula_residuals(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    const auto t = theta2_jet_all(p, tau, ctrl);
    const auto D = t[ch("00;11")].value;
    double scale = 0;
    for (const auto& j : t.v) scale = std::max(scale, std::abs(j.value));
    if (!(std::abs(D) > 1e-10 * scale)) fail(ErrorKind::SingularDenominator, "theta[00;11] vanishes at the point");
    return derivative_formula_residuals(t, theta2_jet_all({}, tau, ctrl));
}

}  // namespace g2
