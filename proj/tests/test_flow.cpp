#include <doctest.h>

#include <cmath>

#include "g2/flow.hpp"
#include "g2/sampling.hpp"

using namespace g2;

namespace {

const Point2 kP{{0.23, -0.11}, {-0.31, 0.07}};
const Point2 kQ{{-0.12, 0.04}, {0.18, -0.09}};

double max_of(const auto& a) {
    double m = 0;
    for (double x : a) m = std::max(m, x);
    return m;
}

}  // namespace

TEST_CASE("flow constants agree by both routes") {
    const auto fc = flow_constants(PeriodMatrix::standard());
    CHECK(std::abs(fc.a_u - fc.a_tilde) / std::abs(fc.a_u) < 1e-10);
    CHECK(std::abs(fc.b_u - fc.b_tilde) / std::abs(fc.b_u) < 1e-10);
    CHECK(std::abs(fc.det) > 1e-6);
}

TEST_CASE("flow constants need a non-split period matrix") {
    PeriodMatrix split{{0.1, 1.1}, {-0.15, 1.3}, {0, 0}};
    try {
        flow_constants(split);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateTau);
    }
}

TEST_CASE("flow equations and abelian differentials by finite differences") {
    const auto tau = PeriodMatrix::standard();
    const Stream s(29);
    for (int i = 0; i < 10; ++i) {
        const Point2 p = sample_point(s.split(i));
        CHECK(max_of(flow_residuals(p, tau, {}, 1e-5)) < 1e-6);
        CHECK(max_of(abelian_differential_residuals(p, tau, {}, 1e-5)) < 1e-6);
    }
}

TEST_CASE("finite-difference error is second order") {
    const auto tau = PeriodMatrix::standard();
    const double e1 = max_of(flow_residuals(kP, tau, {}, 1e-3));
    const double e2 = max_of(flow_residuals(kP, tau, {}, 5e-4));
    const double ratio = e1 / e2;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("addition formulas") {
    const auto tau = PeriodMatrix::standard();
    CHECK(max_of(addition_formula_residuals(kP, kQ, tau)) < 1e-12);
    CHECK(max_of(addition_formula_residuals(kP, Point2{}, tau)) < 1e-12);
    const auto a = addition_formula_residuals(kP, kQ, tau);
    const auto b = addition_formula_residuals(kQ, kP, tau);
    CHECK(max_of(b) < 1e-12);
    CHECK(std::abs(a[0] - b[0]) < 1e-12);
}

TEST_CASE("derivative formulas against analytic gradients") {
    const auto tau = PeriodMatrix::standard();
    const Stream s(31);
    for (int i = 0; i < 20; ++i) CHECK(max_of(derivative_formula_residuals(sample_point(s.split(i)), tau)) < 1e-11);
}

TEST_CASE("pair is invariant under full periods") {
    const auto tau = PeriodMatrix::standard();
    const auto a = recover_pair(kP, tau);
    for (ShiftKind k : {ShiftKind::UOne, ShiftKind::UTauFull}) {
        const auto b = recover_pair(kP + shift_vector(k, tau), tau);
        CHECK(std::abs(a.x1 - b.x1) + std::abs(a.x2 - b.x2) < 1e-10);
    }
}
