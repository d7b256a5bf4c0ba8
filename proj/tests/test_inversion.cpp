#include <doctest.h>

#include <cmath>

#include "g2/inversion.hpp"
#include "g2/sampling.hpp"

using namespace g2;

namespace {

const Point2 kP{{0.23, -0.11}, {-0.31, 0.07}};
// Roots of x^2 - s1 x + s2 from 30-digit brute-force theta ratios at kP.
const cplx kXa{2.1957734977911716, -0.44952374346853963};
const cplx kXb{0.48270729124541973, -0.33659279765565234};

}  // namespace

TEST_CASE("quintic and its factors") {
    const CurveSpec c{2.0, 3.0, 5.0};
    CHECK(f5(2.0, c) == cplx(270.0));
    CHECK(f_factor(0, 1, 0.5, c) == cplx(0.25));
    CHECK(f_factor(3, 4, 0.0, c) == cplx(1.0));
    CHECK(linear_factor(2, 0.5, c) == cplx(0.0));
    CHECK(curve_is_generic(c));
    CHECK_FALSE(curve_is_generic(CurveSpec{2.0, 2.0, 5.0}));
}

TEST_CASE("invalid factor indices") {
    const CurveSpec c{2.0, 3.0, 5.0};
    for (auto [i, j] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{-1, 2}, std::pair{0, 5}}) {
        try {
            f_factor(i, j, 0.5, c);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidFactorIndex);
        }
    }
}

TEST_CASE("recovered pair against oracle") {
    const auto pair = recover_pair(kP, PeriodMatrix::standard());
    const bool direct = std::abs(pair.x1 - kXa) < 1e-12;
    CHECK((direct ? std::abs(pair.x2 - kXb) : std::abs(pair.x1 - kXb) + std::abs(pair.x2 - kXa)) < 1e-12);
    const auto sf = symmetric_functions(kP, PeriodMatrix::standard());
    CHECK(std::abs(sf.s1 - (kXa + kXb)) < 1e-12);
    CHECK(std::abs(sf.s2 - kXa * kXb) < 1e-12);
}

TEST_CASE("pair at the origin is {0, 1/k0^2}") {
    const auto tau = PeriodMatrix::standard();
    const auto ms = moduli_from_tau(tau);
    const auto pair = recover_pair(Point2{}, tau);
    const cplx a = std::abs(pair.x1) < std::abs(pair.x2) ? pair.x1 : pair.x2;
    const cplx b = std::abs(pair.x1) < std::abs(pair.x2) ? pair.x2 : pair.x1;
    CHECK(std::abs(a) < 1e-12);
    CHECK(std::abs(b - 1.0 / ms.k0_sq) < 1e-12);
    for (const auto& r : parameterization_residuals(Point2{}, tau)) {
        INFO(r.index);
        CHECK(r.applicable);
        CHECK(r.value < 1e-12);
    }
}

TEST_CASE("all parameterizations hold with one sign class") {
    const auto tau = PeriodMatrix::standard();
    const auto ms = moduli_from_tau(tau);
    const Stream s(23);
    for (int i = 0; i < 30; ++i) {
        const Point2 p = sample_point(s.split(i));
        const auto t = theta2_all(p, tau);
        const auto pair = recover_pair(t, ms);
        CHECK(std::abs(pair.sigma1 * pair.sigma1 - f5(pair.x1, CurveSpec::from(ms))) <
              1e-10 * (1 + std::abs(pair.sigma1 * pair.sigma1)));
        for (const auto& r : parameterization_residuals(t, ms, pair)) {
            INFO(r.index);
            CHECK(r.value < 1e-10);
        }
        for (double r : pencil_identity_residuals(t, ms, pair)) CHECK(r < 1e-10);
    }
}

TEST_CASE("pair is even in the point and deterministic") {
    const auto tau = PeriodMatrix::standard();
    const auto a = recover_pair(kP, tau);
    const auto b = recover_pair(-kP, tau);
    const auto c = recover_pair(kP, tau);
    CHECK(std::abs(a.x1 - b.x1) + std::abs(a.x2 - b.x2) < 1e-12);
    CHECK(a.x1 == c.x1);
    CHECK(a.x2 == c.x2);
    CHECK(a.sigma1 == c.sigma1);
    CHECK(a.x1.real() >= a.x2.real());
}

TEST_CASE("near-split period matrices stay accurate or report n/a") {
    const double sizes[] = {0.1, 0.01, 0.001};
    for (double e : sizes) {
        PeriodMatrix tau{{0.1, 1.1}, {-0.15, 1.3}, {0, e}};
        for (const auto& r : parameterization_residuals(kP, tau)) {
            if (r.applicable) CHECK(r.value < 1e-8);
        }
    }
    PeriodMatrix split{{0.1, 1.1}, {-0.15, 1.3}, {0, 0}};
    int applicable = 0;
    for (const auto& r : parameterization_residuals(kP, split)) {
        if (!r.applicable) continue;
        ++applicable;
        CHECK(r.value < 1e-8);
    }
    CHECK(applicable >= 3);
}
