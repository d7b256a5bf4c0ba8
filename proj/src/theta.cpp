#include "g2/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace g2 {

namespace {

constexpr double pi = std::numbers::pi;
const cplx ipi{0.0, pi};

// Kahan accumulation, componentwise on the complex value.
struct Compensated {
    double sr = 0, si = 0, cr = 0, ci = 0;
    void add(cplx x) {
        double y = x.real() - cr;
        double t = sr + y;
        cr = (t - sr) - y;
        sr = t;
        y = x.imag() - ci;
        t = si + y;
        ci = (t - si) - y;
        si = t;
    }
    cplx value() const { return {sr, si}; }
};

// i^k for integer k >= 0
cplx ipow(int k) {
    switch (k & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

struct BoxSum {
    Compensated val, du, dv;
};

BoxSum box_sum(Characteristic ch, Point2 p, const PeriodMatrix& tau, int N, bool grad) {
    BoxSum s;
    const cplx ub = p.u + 0.5 * ch.b;
    const cplx vd = p.v + 0.5 * ch.d;
    for (int m = -N; m <= N; ++m) {
        const double mp = m + 0.5 * ch.a;
        for (int n = -N; n <= N; ++n) {
            const double np = n + 0.5 * ch.c;
            const cplx e = ipi * (tau.tau1 * (mp * mp) + tau.tau2 * (np * np) + tau.tau12 * (2.0 * mp * np)) +
                           2.0 * ipi * (mp * ub + np * vd);
            const cplx t = std::exp(e);
            s.val.add(t);
            if (grad) {
                s.du.add(2.0 * ipi * mp * t);
                s.dv.add(2.0 * ipi * np * t);
            }
        }
    }
    return s;
}

// One lattice pass per (a,c); b,d enter as (-1)^(b m + d n) and a constant i^(ab+cd).
template <bool Grad>
void all_sums(Point2 p, const PeriodMatrix& tau, int N, std::array<ThetaJet, 16>& out) {
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            std::array<Compensated, 4> val, du, dv;
            for (int m = -N; m <= N; ++m) {
                const double mp = m + 0.5 * a;
                for (int n = -N; n <= N; ++n) {
                    const double np = n + 0.5 * c;
                    const cplx e =
                        ipi * (tau.tau1 * (mp * mp) + tau.tau2 * (np * np) + tau.tau12 * (2.0 * mp * np)) +
                        2.0 * ipi * (mp * p.u + np * p.v);
                    const cplx t = std::exp(e);
                    const bool mo = (m & 1) != 0, no = (n & 1) != 0;
                    for (int bd = 0; bd < 4; ++bd) {
                        const int b = bd >> 1, d = bd & 1;
                        const bool neg = ((b && mo) != (d && no));
                        const cplx ts = neg ? -t : t;
                        val[bd].add(ts);
                        if constexpr (Grad) {
                            du[bd].add(2.0 * ipi * mp * ts);
                            dv[bd].add(2.0 * ipi * np * ts);
                        }
                    }
                }
            }
            for (int bd = 0; bd < 4; ++bd) {
                const int b = bd >> 1, d = bd & 1;
                const cplx ph = ipow(a * b + c * d);
                const Characteristic k(a, c, b, d);
                ThetaJet& j = out[k.index()];
                j.value = ph * val[bd].value();
                if constexpr (Grad) {
                    j.du = ph * du[bd].value();
                    j.dv = ph * dv[bd].value();
                }
            }
        }
    }
}

}  // namespace

int truncation_radius(const PeriodMatrix& tau, Point2 p, const SeriesControl& ctrl) {
    tau.check();
    ctrl.check();
    const double y1 = tau.tau1.imag(), y2 = tau.tau2.imag(), y12 = tau.tau12.imag();
    const double det = y1 * y2 - y12 * y12;
    const double iu = p.u.imag(), iv = p.v.imag();
    const double c0 = (y2 * iu - y12 * iv) / det;
    const double c1 = (-y12 * iu + y1 * iv) / det;
    const double r0 = std::max(std::abs(c0), std::abs(c1));
    const double lam = tau.lambda_min();
    const double pref = std::max(1.0, 1.0 / lam);
    if (!std::isfinite(r0)) fail(ErrorKind::TruncationOverflow, "non-finite point");
    for (int N = 1; N <= ctrl.max_radius; ++N) {
        if (N <= r0) continue;
        const double r = N - r0;
        if (pref * std::exp(-pi * lam * r * r) < ctrl.tol) return N;
    }
    fail(ErrorKind::TruncationOverflow,
         "required radius exceeds max_radius=" + std::to_string(ctrl.max_radius));
}

cplx theta2_box(Characteristic ch, Point2 p, const PeriodMatrix& tau, int radius) {
    return box_sum(ch, p, tau, radius, false).val.value();
}

cplx theta2(Characteristic ch, Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    return theta2_box(ch, p, tau, truncation_radius(tau, p, ctrl));
}

ThetaJet theta2_jet(Characteristic ch, Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    const auto s = box_sum(ch, p, tau, truncation_radius(tau, p, ctrl), true);
    return {s.val.value(), s.du.value(), s.dv.value()};
}

std::pair<cplx, cplx> theta2_grad(Characteristic ch, Point2 p, const PeriodMatrix& tau,
                                  const SeriesControl& ctrl) {
    const auto j = theta2_jet(ch, p, tau, ctrl);
    return {j.du, j.dv};
}

ThetaTable theta2_all(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    std::array<ThetaJet, 16> jets{};
    all_sums<false>(p, tau, truncation_radius(tau, p, ctrl), jets);
    ThetaTable t;
    for (int i = 0; i < 16; ++i) t.v[i] = jets[i].value;
    return t;
}

ThetaJetTable theta2_jet_all(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    ThetaJetTable t;
    all_sums<true>(p, tau, truncation_radius(tau, p, ctrl), t.v);
    return t;
}

int parity(Characteristic ch) { return ((ch.a * ch.b + ch.c * ch.d) & 1) ? -1 : 1; }

bool is_odd(Characteristic ch) { return parity(ch) < 0; }

const std::array<Characteristic, 6>& odd_characteristics() {
    static const std::array<Characteristic, 6> odd{ch("10;10"), ch("11;10"), ch("10;11"),
                                                   ch("01;01"), ch("11;01"), ch("01;11")};
    return odd;
}

const std::array<Characteristic, 10>& even_characteristics() {
    static const std::array<Characteristic, 10> even = [] {
        std::array<Characteristic, 10> e{};
        int k = 0;
        for (int i = 0; i < 16; ++i) {
            auto c = Characteristic::from_index(i);
            if (!is_odd(c)) e[k++] = c;
        }
        return e;
    }();
    return even;
}

const char* shift_name(ShiftKind k) {
    switch (k) {
        case ShiftKind::UHalf: return "U_HALF";
        case ShiftKind::UTauHalf: return "U_TAU_HALF";
        case ShiftKind::UTauPlusHalf: return "U_TAU_PLUS_HALF";
        case ShiftKind::UOne: return "U_ONE";
        case ShiftKind::UTauFull: return "U_TAU_FULL";
    }
    return "?";
}

cplx ShiftRule::factor(Point2 p, const PeriodMatrix& tau) const {
    return sign * std::exp(ipi * (tau1_coeff.value() * tau.tau1 + u_coeff.value() * p.u));
}

ShiftRule half_shift(Characteristic c, ShiftKind kind) {
    const cplx minus_i{0, -1};
    auto half_sign = [](int a, int b) { return (a == 1 && b == 1) ? -1.0 : 1.0; };
    ShiftRule r;
    r.new_characteristic = c;
    switch (kind) {
        case ShiftKind::UHalf:
            r.new_characteristic.b = 1 - c.b;
            r.sign = half_sign(c.a, c.b);
            break;
        case ShiftKind::UTauHalf:
            r.new_characteristic.a = 1 - c.a;
            r.sign = c.b ? minus_i : cplx{1, 0};
            r.tau1_coeff = {-1, 4};
            r.u_coeff = {-1, 1};
            break;
        case ShiftKind::UTauPlusHalf:
            r.new_characteristic.a = 1 - c.a;
            r.new_characteristic.b = 1 - c.b;
            r.sign = (c.b ? cplx{-1, 0} : minus_i) * half_sign(1 - c.a, c.b);
            r.tau1_coeff = {-1, 4};
            r.u_coeff = {-1, 1};
            break;
        case ShiftKind::UOne:
            r.sign = c.a ? -1.0 : 1.0;
            break;
        case ShiftKind::UTauFull:
            r.sign = c.b ? -1.0 : 1.0;
            r.tau1_coeff = {-1, 1};
            r.u_coeff = {-2, 1};
            break;
    }
    return r;
}

Point2 shift_vector(ShiftKind kind, const PeriodMatrix& tau) {
    switch (kind) {
        case ShiftKind::UHalf: return {0.5, 0.0};
        case ShiftKind::UTauHalf: return {0.5 * tau.tau1, 0.5 * tau.tau12};
        case ShiftKind::UTauPlusHalf: return {0.5 * tau.tau1 + 0.5, 0.5 * tau.tau12};
        case ShiftKind::UOne: return {1.0, 0.0};
        case ShiftKind::UTauFull: return {tau.tau1, tau.tau12};
    }
    return {};
}

std::vector<cplx> theta2_batch_serial(Characteristic c, std::span<const Point2> pts, const PeriodMatrix& tau,
                                      const SeriesControl& ctrl) {
    tau.check();
    ctrl.check();
    std::vector<cplx> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = theta2(c, pts[i], tau, ctrl);
    return out;
}

std::vector<cplx> theta2_batch(Characteristic c, std::span<const Point2> pts, const PeriodMatrix& tau,
                               const SeriesControl& ctrl) {
    tau.check();
    ctrl.check();
    std::vector<cplx> out(pts.size());
    const long n = static_cast<long>(pts.size());
    // Errors cannot cross the parallel region; record the first failing index and rethrow serially.
    long bad = -1;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = theta2(c, pts[i], tau, ctrl);
        } catch (const Error&) {
#pragma omp critical
            if (bad < 0 || i < bad) bad = i;
        }
    }
    if (bad >= 0) out[bad] = theta2(c, pts[bad], tau, ctrl);
    return out;
}

}  // namespace g2
