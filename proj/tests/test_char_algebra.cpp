#include <doctest.h>

#include <cmath>

#include "g2/char_algebra.hpp"
#include "g2/sampling.hpp"

using namespace g2;

namespace {

Quadruple fixed_quadruple() {
    return {Point2{{0.1, 0.05}, {-0.2, 0.1}}, Point2{{-0.3, -0.02}, {0.25, 0.0}},
            Point2{{0.4, 0.1}, {0.05, -0.15}}, Point2{{-0.15, 0.12}, {-0.35, 0.08}}};
}

// 30-digit brute-force product of th[10;00] + th[11;00] over the quadruple.
const cplx kM1{0.12929673607080987, -0.060435566984963031};

}  // namespace

TEST_CASE("riemann transform of integers") {
    Quadruple q{Point2{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    const auto t = riemann_transform(q);
    const double want[4] = {5, -2, -1, 0};
    for (int i = 0; i < 4; ++i) {
        CHECK(t[i].u == cplx(want[i]));
        CHECK(t[i].v == cplx(want[i]));
    }
}

TEST_CASE("riemann transform is an involution") {
    const auto q = fixed_quadruple();
    const auto back = riemann_transform(riemann_transform(q));
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(back[i].u - q[i].u) < 1e-16);
        CHECK(std::abs(back[i].v - q[i].v) < 1e-16);
    }
}

TEST_CASE("product against brute-force oracle") {
    const auto tau = PeriodMatrix::standard();
    const cplx m1 = product_m(ProductVariant::M1, fixed_quadruple(), tau);
    CHECK(std::abs(m1 - kM1) < 1e-15);
    CHECK(products_m(fixed_quadruple(), tau)[1] == m1);
}

TEST_CASE("riemann relations over seeded quadruples") {
    const auto tau = PeriodMatrix::standard();
    const Stream s(3);
    for (int i = 0; i < 20; ++i) {
        Quadruple q;
        for (int k = 0; k < 4; ++k) q[k] = sample_point(s.split(i).split(k));
        for (double r : riemann_relation_residuals(q, tau)) CHECK(r < 1e-12);
    }
}

TEST_CASE("fundamental identities over seeded points") {
    const auto tau = PeriodMatrix::standard();
    const Stream s(5);
    for (int i = 0; i < 20; ++i)
        for (double r : fundamental_identity_residuals(sample_point(s.split(i)), tau)) CHECK(r < 1e-12);
}

TEST_CASE("fundamental identities at the origin reduce to null identities") {
    const auto tau = PeriodMatrix::standard();
    for (double r : fundamental_identity_residuals(Point2{}, tau)) CHECK(r < 1e-13);
}
