#include "g2/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "g2/inversion.hpp"

namespace g2 {

namespace {

constexpr double pi = std::numbers::pi;
const cplx ipi{0.0, pi};

constexpr Genus1Characteristic g00{0, 0}, g01{0, 1}, g10{1, 0}, g11{1, 1};

struct Nulls1 {
    cplx t00, t01, t10;
};

Nulls1 nulls1(cplx tau, const SeriesControl& ctrl) {
    return {theta1(g00, 0.0, tau, ctrl), theta1(g01, 0.0, tau, ctrl), theta1(g10, 0.0, tau, ctrl)};
}

}  // namespace

int truncation_radius1(cplx tau, cplx z, const SeriesControl& ctrl) {
    ctrl.check();
    const double lam = tau.imag();
    if (!(lam > 0) || !std::isfinite(lam)) fail(ErrorKind::DegenerateTau, "Im tau must be positive");
    const double r0 = std::abs(z.imag()) / lam;
    const double pref = std::max(1.0, 1.0 / lam);
    for (int N = 1; N <= ctrl.max_radius; ++N) {
        if (N <= r0) continue;
        const double r = N - r0;
        if (pref * std::exp(-pi * lam * r * r) < ctrl.tol) return N;
    }
    fail(ErrorKind::TruncationOverflow, "required radius exceeds max_radius=" + std::to_string(ctrl.max_radius));
}

cplx theta1(Genus1Characteristic c, cplx z, cplx tau, const SeriesControl& ctrl) {
    const int N = truncation_radius1(tau, z, ctrl);
    const cplx zb = z + 0.5 * c.b;
    double sr = 0, si = 0, cr = 0, ci = 0;
    for (int n = -N; n <= N; ++n) {
        const double np = n + 0.5 * c.a;
        const cplx t = std::exp(ipi * tau * (np * np) + 2.0 * ipi * np * zb);
        double y = t.real() - cr, s = sr + y;
        cr = (s - sr) - y;
        sr = s;
        y = t.imag() - ci;
        s = si + y;
        ci = (s - si) - y;
        si = s;
    }
    return {sr, si};
}

EllipticModulus elliptic_modulus(cplx tau, const SeriesControl& ctrl) {
    const auto n = nulls1(tau, ctrl);
    EllipticModulus m;
    m.k = n.t10 * n.t10 / (n.t00 * n.t00);
    m.kp = n.t01 * n.t01 / (n.t00 * n.t00);
    m.k_sq = m.k * m.k;
    m.kp_sq = m.kp * m.kp;
    return m;
}

JacobiValues jacobi_functions(cplx z, cplx tau, const SeriesControl& ctrl) {
    const auto n = nulls1(tau, ctrl);
    const cplx a00 = theta1(g00, z, tau, ctrl), a01 = theta1(g01, z, tau, ctrl);
    const cplx a10 = theta1(g10, z, tau, ctrl), a11 = theta1(g11, z, tau, ctrl);
    const double scale = std::max({std::abs(a00), std::abs(a01), std::abs(a10), std::abs(a11)});
    if (!(std::abs(a01) > 1e-10 * scale)) fail(ErrorKind::SingularDenominator, "theta[0;1](z) vanishes");
    JacobiValues j;
    j.sn = -n.t00 * a11 / (n.t10 * a01);
    j.cn = n.t01 * a10 / (n.t10 * a01);
    j.dn = n.t01 * a00 / (n.t00 * a01);
    j.modulus = elliptic_modulus(tau, ctrl);
    return j;
}

std::array<double, 4> elliptic_identity_residuals(cplx z, cplx tau, const SeriesControl& ctrl) {
    const auto n = nulls1(tau, ctrl);
    auto sq = [](cplx x) { return x * x; };
    const cplx q00 = sq(n.t00), q01 = sq(n.t01), q10 = sq(n.t10);
    const cplx w00 = sq(theta1(g00, z, tau, ctrl)), w01 = sq(theta1(g01, z, tau, ctrl));
    const cplx w10 = sq(theta1(g10, z, tau, ctrl)), w11 = sq(theta1(g11, z, tau, ctrl));
    std::array<double, 4> out{};
    {
        const cplx t1 = q01 * w01, t2 = q10 * w10;
        out[0] = rel_residual(q00 * w00, t1 + t2, {t1, t2});
    }
    {
        const cplx t1 = q10 * w01, t2 = q01 * w10;
        out[1] = rel_residual(q00 * w11, t1 - t2, {t1, t2});
    }
    {
        const cplx t1 = q01 * w00, t2 = q10 * w11;
        out[2] = rel_residual(q00 * w01, t1 + t2, {t1, t2});
    }
    {
        const cplx t1 = q01 * q01, t2 = q10 * q10;
        out[3] = rel_residual(q00 * q00, t1 + t2, {t1, t2});
    }
    return out;
}

double splitting_residual(Point2 p, cplx tau1, cplx tau2, const SeriesControl& ctrl) {
    const PeriodMatrix tau{tau1, tau2, 0.0};
    const auto t = theta2_all(p, tau, ctrl);
    double worst = 0;
    for (int i = 0; i < 16; ++i) {
        const auto c = Characteristic::from_index(i);
        const cplx prod = theta1({c.a, c.b}, p.u, tau1, ctrl) * theta1({c.c, c.d}, p.v, tau2, ctrl);
        worst = std::max(worst, rel_residual(t.v[i], prod));
    }
    return worst;
}

cplx split_coordinate(cplx u, cplx tau1, const SeriesControl& ctrl) {
    const auto n = nulls1(tau1, ctrl);
    const cplx d = theta1(g01, u, tau1, ctrl);
    if (!(std::abs(d) > 1e-10 * std::abs(n.t00))) fail(ErrorKind::SingularDenominator, "theta[0;1](u) vanishes");
    return n.t00 * theta1(g11, u, tau1, ctrl) / (n.t10 * d);
}

std::vector<LabeledResidual> degenerate_inversion_residuals(Point2 p, cplx tau1, cplx tau2,
                                                            const SeriesControl& ctrl) {
    const PeriodMatrix tau{tau1, tau2, 0.0};
    const auto ms = moduli_from_tau(tau, ctrl);
    const auto table = theta2_all(p, tau, ctrl);
    const auto sf = symmetric_functions(table, ms);
    const auto pair = recover_pair(table, ms);
    const cplx x = split_coordinate(p.u, tau1, ctrl);
    const cplx x2 = x * x;
    const cplx k = ms.k0_sq;
    const auto em = elliptic_modulus(tau1, ctrl);

    std::vector<LabeledResidual> out;
    out.push_back({"k0^2 x1 x2 = x^2", rel_residual(k * sf.s2, x2)});
    out.push_back({"k0^2/(1-k0^2) (1-x1)(1-x2) = -(1-x^2)", rel_residual(k / (1.0 - k) * sf.one_minus, -(1.0 - x2))});
    {
        const cplx a = k * sf.s1, b = k * k * sf.s2;
        out.push_back({"(1-k0^2 x1)(1-k0^2 x2) = 0", rel_residual(1.0 - a + b, 0.0, {1.0, a, b})});
    }
    out.push_back({"k0^2 = k1^2", rel_residual(ms.k0_sq, ms.k1_sq)});
    out.push_back({"k0^2 = k2^2", rel_residual(ms.k0_sq, ms.k2_sq)});
    out.push_back({"k0^2 = genus-1 k^2", rel_residual(ms.k0_sq, em.k_sq)});
    {
        const cplx c = 1.0 / k;
        const double straight = std::max(rel_residual(pair.x1, x2), rel_residual(pair.x2, c));
        const double crossed = std::max(rel_residual(pair.x1, c), rel_residual(pair.x2, x2));
        out.push_back({"pair = {x^2, 1/k0^2}", std::min(straight, crossed)});
    }
    return out;
}

double sn_ode_residual(cplx z, cplx tau, const SeriesControl& ctrl, double h) {
    const auto n = nulls1(tau, ctrl);
    const cplx K = 0.5 * pi * n.t00 * n.t00;
    const cplx ksq = std::pow(n.t10 / n.t00, 4);
    const cplx x = split_coordinate(z, tau, ctrl);
    const cplx dxdu = (split_coordinate(z + h, tau, ctrl) - split_coordinate(z - h, tau, ctrl)) / (2.0 * h * 2.0 * K);
    const cplx rhs = (1.0 - x * x) * (1.0 - ksq * x * x);
    return rel_residual(dxdu * dxdu, rhs);
}

double tanh_sinh(const std::function<double(double, double, double)>& f, double a, double b, double tol,
                 int max_level) {
    const double half = 0.5 * (b - a);
    constexpr double t_max = 4.5;
    auto term = [&](double t) {
        const double s = 0.5 * pi * std::sinh(t);
        const double chs = std::cosh(s);
        const double w = half * 0.5 * pi * std::cosh(t) / (chs * chs);
        const double da = half * std::exp(s) / chs;   // x - a
        const double db = half * std::exp(-s) / chs;  // b - x
        const double x = t < 0 ? a + da : b - db;
        return w * f(x, da, db);
    };
    double h = 1.0;
    double sum = term(0.0);
    for (int k = 1; k * h <= t_max; ++k) sum += term(k * h) + term(-k * h);
    double prev = h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (int k = 1; k * h <= t_max; k += 2) sum += term(k * h) + term(-k * h);
        const double cur = h * sum;
        if (level >= 3 && std::abs(cur - prev) <= tol * std::abs(cur)) return cur;
        prev = cur;
    }
    fail(ErrorKind::QuadratureNonconvergence, "tanh-sinh did not converge by level " + std::to_string(max_level));
}

CompleteIntegrals complete_integrals(double k, double kp) {
    auto integrand = [](double m) {
        return [m](double x, double, double one_minus) {
            return 1.0 / std::sqrt(one_minus * (1.0 + x) * (1.0 - m * m * x * x));
        };
    };
    return {tanh_sinh(integrand(k), 0.0, 1.0), tanh_sinh(integrand(kp), 0.0, 1.0)};
}

std::array<double, 2> complete_integral_residuals(cplx tau, const SeriesControl& ctrl) {
    if (tau.real() != 0.0 || !(tau.imag() >= 0.5 && tau.imag() <= 3.0))
        fail(ErrorKind::ConfigInvalid, "complete integrals need tau = i t with t in [0.5, 3]");
    const auto n = nulls1(tau, ctrl);
    const double k = (n.t10 * n.t10 / (n.t00 * n.t00)).real();
    const double kp = (n.t01 * n.t01 / (n.t00 * n.t00)).real();
    const auto ci = complete_integrals(k, kp);
    const cplx predicted{0.0, ci.Kp / ci.K};
    return {rel_residual(tau, predicted), rel_residual(n.t00 * n.t00, 2.0 * ci.K / pi)};
}

}  // namespace g2
