#include "g2/char_algebra.hpp"

namespace g2 {

namespace {

constexpr std::array<std::array<int, 4>, 4> kRiemann{{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};

struct VariantChars {
    Characteristic first, second;
};

constexpr std::array<VariantChars, 4> kVariants{{
    {ch("00;00"), ch("01;00")},
    {ch("10;00"), ch("11;00")},
    {ch("10;10"), ch("11;10")},
    {ch("00;10"), ch("01;10")},
}};

std::array<cplx, 4> products_from_tables(const std::array<ThetaTable, 4>& t) {
    std::array<cplx, 4> out{};
    for (int k = 0; k < 4; ++k) {
        cplx p1 = 1.0, p2 = 1.0;
        for (int i = 0; i < 4; ++i) {
            p1 *= t[i][kVariants[k].first];
            p2 *= t[i][kVariants[k].second];
        }
        out[k] = p1 + p2;
    }
    return out;
}

std::array<ThetaTable, 4> tables(const Quadruple& q, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    std::array<ThetaTable, 4> t;
    for (int i = 0; i < 4; ++i) t[i] = theta2_all(q[i], tau, ctrl);
    return t;
}

// Residuals of 2*lhs[k] = sum_j A[k][j] rhs[j].
void relation_residuals(const std::array<cplx, 4>& lhs, const std::array<cplx, 4>& rhs, double* out) {
    for (int k = 0; k < 4; ++k) {
        cplx s = 0.0;
        for (int j = 0; j < 4; ++j) s += double(kRiemann[k][j]) * rhs[j];
        out[k] = rel_residual(2.0 * lhs[k], s, {rhs[0], rhs[1], rhs[2], rhs[3]});
    }
}

}  // namespace

Quadruple riemann_transform(const Quadruple& q) {
    Quadruple r;
    for (int k = 0; k < 4; ++k) {
        cplx su = 0.0, sv = 0.0;
        for (int j = 0; j < 4; ++j) {
            su += double(kRiemann[k][j]) * q[j].u;
            sv += double(kRiemann[k][j]) * q[j].v;
        }
        r[k] = {0.5 * su, 0.5 * sv};
    }
    return r;
}

cplx product_m(ProductVariant variant, const Quadruple& q, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    const auto& vc = kVariants[static_cast<int>(variant)];
    cplx p1 = 1.0, p2 = 1.0;
    for (const auto& p : q) {
        p1 *= theta2(vc.first, p, tau, ctrl);
        p2 *= theta2(vc.second, p, tau, ctrl);
    }
    return p1 + p2;
}

std::array<cplx, 4> products_m(const Quadruple& q, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    return products_from_tables(tables(q, tau, ctrl));
}

std::array<double, 8> riemann_relation_residuals(const Quadruple& q, const PeriodMatrix& tau,
                                                 const SeriesControl& ctrl) {
    const auto m = products_m(q, tau, ctrl);
    const auto mt = products_m(riemann_transform(q), tau, ctrl);
    std::array<double, 8> out{};
    relation_residuals(m, mt, out.data());
    relation_residuals(mt, m, out.data() + 4);
    return out;
}

std::array<double, 3> fundamental_identity_residuals(const ThetaTable& t, const ThetaTable& n) {
    auto sq = [](cplx x) { return x * x; };
    auto q = [&](const char(&s)[6]) { return sq(n[Characteristic::parse(s)]); };
    auto w = [&](const char(&s)[6]) { return sq(t[Characteristic::parse(s)]); };
    std::array<double, 3> out{};
    {
        const cplx l = q("00;00") * w("00;00");
        const cplx t1 = q("00;10") * w("00;10"), t2 = q("10;00") * w("10;00"), t3 = q("11;11") * w("11;11");
        out[0] = rel_residual(l, t1 + t2 + t3, {t1, t2, t3});
    }
    {
        const cplx l = q("01;00") * w("00;00");
        const cplx t1 = q("01;10") * w("00;10"), t2 = q("11;00") * w("10;00"), t3 = q("11;11") * w("10;11");
        out[1] = rel_residual(l, t1 + t2 + t3, {t1, t2, t3});
    }
    {
        const cplx l = q("00;01") * w("00;00");
        const cplx t1 = q("00;11") * w("00;10"), t2 = q("10;01") * w("10;00"), t3 = q("11;11") * w("11;10");
        out[2] = rel_residual(l, t1 + t2 - t3, {t1, t2, t3});
    }
    return out;
}

std::array<double, 3> fundamental_identity_residuals(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl) {
    return fundamental_identity_residuals(theta2_all(p, tau, ctrl), theta2_all({}, tau, ctrl));
}

}  // namespace g2
