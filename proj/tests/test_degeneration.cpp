#include <doctest.h>

#include <cmath>
#include <numbers>

#include "g2/degeneration.hpp"
#include "g2/inversion.hpp"
#include "g2/sampling.hpp"

using namespace g2;

namespace {

const cplx kI{0, 1};
// pi^(1/4) / Gamma(3/4)
const double kTheta3AtI = 1.0864348112133080;
// K(k^2 = 1/2) = Gamma(1/4)^2 / (4 sqrt(pi))
const double kKHalf = 1.8540746773013719;

}  // namespace

TEST_CASE("genus-1 null at tau = i") {
    CHECK(std::abs(theta1({0, 0}, 0.0, kI) - kTheta3AtI) < 1e-15);
    CHECK(std::abs(theta1({1, 1}, 0.0, kI)) < 1e-15);
}

TEST_CASE("lemniscatic modulus") {
    const auto m = elliptic_modulus(kI);
    CHECK(std::abs(m.k_sq - 0.5) < 1e-14);
    CHECK(std::abs(m.k_sq + m.kp_sq - 1.0) < 1e-14);
}

TEST_CASE("modulus and complement swap under tau -> -1/tau") {
    const auto a = elliptic_modulus(cplx{0, 0.6});
    const auto b = elliptic_modulus(cplx{0, 1 / 0.6});
    CHECK(std::abs(a.k_sq - b.kp_sq) < 1e-13);
    CHECK(std::abs(a.kp_sq - b.k_sq) < 1e-13);
}

TEST_CASE("splitting over all characteristics") {
    const Stream s(37);
    for (int i = 0; i < 10; ++i) CHECK(splitting_residual(sample_point(s.split(i)), {0.1, 1.1}, {-0.15, 1.3}) < 1e-13);
}

TEST_CASE("jacobi functions at zero") {
    const auto j = jacobi_functions(0.0, cplx{0.1, 1.1});
    CHECK(std::abs(j.sn) < 1e-15);
    CHECK(std::abs(j.cn - 1.0) < 1e-14);
    CHECK(std::abs(j.dn - 1.0) < 1e-14);
}

TEST_CASE("jacobi identities and squared-theta identities") {
    const cplx tau{0.1, 1.1};
    const Stream s(41);
    for (int i = 0; i < 20; ++i) {
        const cplx z = sample_point(s.split(i)).u;
        const auto j = jacobi_functions(z, tau);
        CHECK(std::abs(j.sn * j.sn + j.cn * j.cn - 1.0) < 1e-12);
        CHECK(std::abs(j.dn * j.dn + j.modulus.k_sq * j.sn * j.sn - 1.0) < 1e-12);
        for (double r : elliptic_identity_residuals(z, tau)) CHECK(r < 1e-12);
    }
}

TEST_CASE("split inversion pair") {
    const cplx t1{0.1, 1.1}, t2{-0.15, 1.3};
    const auto m = elliptic_modulus(t1);
    const Stream s(43);
    for (int i = 0; i < 10; ++i) {
        for (const auto& r : degenerate_inversion_residuals(sample_point(s.split(i)), t1, t2)) {
            INFO(r.label);
            CHECK(r.value < 1e-10);
        }
    }
    // The constant member does not depend on the point.
    const auto a = recover_pair(sample_point(s.split(100)), PeriodMatrix{t1, t2, 0});
    const auto b = recover_pair(sample_point(s.split(101)), PeriodMatrix{t1, t2, 0});
    auto constant = [&](const PointPair& p) {
        return std::abs(p.x1 - 1.0 / m.k_sq) < std::abs(p.x2 - 1.0 / m.k_sq) ? p.x1 : p.x2;
    };
    CHECK(std::abs(constant(a) - constant(b)) < 1e-9);
    CHECK(std::abs(constant(a) - 1.0 / m.k_sq) < 1e-9);
}

TEST_CASE("split coordinate vanishes at the origin") {
    CHECK(std::abs(split_coordinate(0.0, cplx{0.1, 1.1})) < 1e-15);
}

TEST_CASE("sn differential equation is second order in the step") {
    const cplx tau{0, 1};
    const cplx z{0.13, 0.02};
    const double e1 = sn_ode_residual(z, tau, {}, 1e-3);
    const double e2 = sn_ode_residual(z, tau, {}, 5e-4);
    CHECK(e1 / e2 > 3.5);
    CHECK(e1 / e2 < 4.5);
    CHECK(sn_ode_residual(z, tau, {}, 1e-5) < 1e-8);
}

TEST_CASE("tanh-sinh quadrature") {
    const double pi = std::numbers::pi;
    const double v = tanh_sinh([](double x, double, double) { return 1 / (1 + x * x); }, 0, 1);
    CHECK(std::abs(v - pi / 4) < 1e-14);
    const double w = tanh_sinh([](double, double da, double db) { return 1 / std::sqrt(da * db); }, 0, 1);
    CHECK(std::abs(w - pi) < 1e-12);
}

TEST_CASE("complete integrals") {
    const double s = std::sqrt(0.5);
    const auto ci = complete_integrals(s, s);
    CHECK(std::abs(ci.K - kKHalf) < 1e-13);
    CHECK(std::abs(ci.Kp - kKHalf) < 1e-13);
    for (cplx t : {cplx{0, 1}, cplx{0, 1.5}})
        for (double r : complete_integral_residuals(t)) CHECK(r < 1e-12);
    CHECK_THROWS_AS(complete_integral_residuals(cplx{0.1, 1}), Error);
}
