#include <doctest.h>

#include <cmath>

#include "g2/moduli.hpp"
#include "g2/sampling.hpp"

using namespace g2;

namespace {

// 30-digit brute-force theta-null ratios at the standard period matrix.
const cplx kK0Sq{0.44362529828394364, 0.078685811547354335};
const cplx kK1Sq{0.43286156943761681, 0.089290670853006687};
const cplx kK2Sq{0.38904331009878607, 0.096964031770009188};

}  // namespace

TEST_CASE("squared moduli against oracle") {
    const auto ms = moduli_from_tau(PeriodMatrix::standard());
    CHECK(std::abs(ms.k0_sq - kK0Sq) < 1e-14);
    CHECK(std::abs(ms.k1_sq - kK1Sq) < 1e-14);
    CHECK(std::abs(ms.k2_sq - kK2Sq) < 1e-14);
}

TEST_CASE("complements and differences") {
    const auto ms = moduli_from_tau(PeriodMatrix::standard());
    CHECK(std::abs(ms.kp0_sq - (1.0 - ms.k0_sq)) < 1e-14);
    CHECK(std::abs(ms.kp2_sq - (1.0 - ms.k2_sq)) < 1e-14);
    CHECK(std::abs(ms.k01_sq - (ms.k0_sq - ms.k1_sq)) < 1e-14);
    CHECK(std::abs(ms.k12_sq - (ms.k1_sq - ms.k2_sq)) < 1e-14);
    CHECK(std::abs(ms.k0 * ms.k0 - ms.k0_sq) < 1e-15);
    CHECK(std::abs(ms.k12 * ms.k12 - ms.k12_sq) < 1e-15);
}

TEST_CASE("consistency residuals at seeded period matrices") {
    const Stream s(17);
    for (int i = 0; i < 10; ++i) {
        const auto tau = sample_tau(s.split(i));
        CHECK(tau.valid());
        for (const auto& r : moduli_consistency_residuals(tau)) {
            INFO(r.label);
            CHECK(r.value < 1e-12);
        }
    }
}

TEST_CASE("null ratios from moduli roots") {
    const auto ms = moduli_from_tau(PeriodMatrix::standard());
    for (const auto& r : null_ratio_check(ms)) {
        INFO(r.ch.str());
        CHECK(r.residual < 1e-12);
        CHECK(r.sign == 1);
    }
}

TEST_CASE("diagonal period matrix collapses the three moduli") {
    PeriodMatrix tau{{0.1, 1.1}, {-0.15, 1.3}, {0, 0}};
    const auto ms = moduli_from_tau(tau);
    CHECK(std::abs(ms.k0_sq - ms.k1_sq) < 1e-13);
    CHECK(std::abs(ms.k0_sq - ms.k2_sq) < 1e-13);
    CHECK(std::abs(ms.k01_sq) < 1e-13);
}

TEST_CASE("vanishing modulus is refused by the null ratios") {
    const auto ms = ModuliSet::from_squares(0.4, 0.0, 0.3);
    try {
        null_ratios_from_moduli(ms);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZeroModulus);
    }
}

TEST_CASE("degenerate period matrix is refused") {
    PeriodMatrix tau{{0, 0}, {0, 1}, {0, 0}};
    CHECK_THROWS_AS(moduli_from_tau(tau), Error);
}
