#include <doctest.h>

#include <cmath>
#include <vector>

#include "g2/sampling.hpp"
#include "g2/theta.hpp"

using namespace g2;

namespace {

// Values from a 30-digit brute-force lattice sum over |m|,|n| <= 30 at the standard period matrix.
const cplx kTheta0000Null{1.0948200347594372, 0.0019329251167289659};
const Point2 kP{{0.23, -0.11}, {-0.31, 0.07}};
const cplx kTheta0110AtP{0.47397187670036059, 0.044692516641481616};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("standard period matrix is valid") {
    const auto t = PeriodMatrix::standard();
    CHECK(t.valid());
    CHECK(t.lambda_min() > 0);
    PeriodMatrix bad{{0, 1}, {0, 1}, {0, 1}};
    CHECK_FALSE(bad.valid());
    CHECK_THROWS_AS(bad.check(), Error);
}

TEST_CASE("characteristic parse and index round trip") {
    for (int i = 0; i < 16; ++i) {
        const auto c = Characteristic::from_index(i);
        CHECK(Characteristic::parse(c.str()) == c);
        CHECK(c.index() == i);
    }
    CHECK(ch("10;11") == Characteristic{1, 0, 1, 1});
    CHECK_THROWS_AS(Characteristic::parse("12;00"), Error);
}

TEST_CASE("parity splits into 10 even and 6 odd") {
    int odd = 0;
    for (int i = 0; i < 16; ++i) odd += is_odd(Characteristic::from_index(i));
    CHECK(odd == 6);
    for (const auto& c : odd_characteristics()) CHECK(parity(c) == -1);
    for (const auto& c : even_characteristics()) CHECK(parity(c) == 1);
    CHECK_FALSE(is_odd(ch("10;01")));
    CHECK(is_odd(ch("10;10")));
    CHECK(is_odd(ch("01;11")));
}

TEST_CASE("truncation radius") {
    PeriodMatrix id{{0, 1}, {0, 1}, {0, 0}};
    CHECK(truncation_radius(id, {}) == 4);
    CHECK(truncation_radius(id, {}, {0.5, 64}) == 1);

    PeriodMatrix tiny{{0, 0.001}, {0, 0.001}, {0, 0}};
    CHECK_THROWS_AS(truncation_radius(tiny, {}), Error);
    PeriodMatrix small{{0, 0.01}, {0, 0.01}, {0, 0}};
    CHECK_THROWS_AS(truncation_radius(small, {}, {1e-14, 32}), Error);
    CHECK(truncation_radius(small, {}) == 35);
}

TEST_CASE("theta values against brute-force oracle") {
    const auto tau = PeriodMatrix::standard();
    CHECK(rel(theta2(ch("00;00"), {}, tau), kTheta0000Null) < 1e-14);
    CHECK(rel(theta2(ch("01;10"), kP, tau), kTheta0110AtP) < 1e-14);
    CHECK(rel(theta2_box(ch("01;10"), kP, tau, 20), kTheta0110AtP) < 1e-14);
}

TEST_CASE("one-pass table matches single evaluations") {
    const auto tau = PeriodMatrix::standard();
    const auto t = theta2_all(kP, tau);
    const auto j = theta2_jet_all(kP, tau);
    for (int i = 0; i < 16; ++i) {
        const auto c = Characteristic::from_index(i);
        CHECK(rel(t[c], theta2(c, kP, tau)) < 1e-14);
        CHECK(rel(j[c].value, t[c]) < 1e-14);
    }
}

TEST_CASE("odd nulls vanish and parity holds under negation") {
    const auto tau = PeriodMatrix::standard();
    for (const auto& c : odd_characteristics()) CHECK(std::abs(theta2(c, {}, tau)) < 1e-15);
    for (int i = 0; i < 16; ++i) {
        const auto c = Characteristic::from_index(i);
        CHECK(rel(theta2(c, -kP, tau), double(parity(c)) * theta2(c, kP, tau)) < 1e-14);
    }
}

TEST_CASE("gradients against central differences") {
    const auto tau = PeriodMatrix::standard();
    const double h = 1e-5;
    for (int i = 0; i < 16; ++i) {
        const auto c = Characteristic::from_index(i);
        const auto [du, dv] = theta2_grad(c, kP, tau);
        const cplx fu = (theta2(c, kP + Point2{h, 0}, tau) - theta2(c, kP - Point2{h, 0}, tau)) / (2 * h);
        const cplx fv = (theta2(c, kP + Point2{0, h}, tau) - theta2(c, kP - Point2{0, h}, tau)) / (2 * h);
        CHECK(std::abs(du - fu) / (1 + std::abs(du)) < 1e-8);
        CHECK(std::abs(dv - fv) / (1 + std::abs(dv)) < 1e-8);
    }
}

TEST_CASE("half-period shift table") {
    const auto tau = PeriodMatrix::standard();
    const Stream s(7);
    for (ShiftKind k : all_shift_kinds) {
        for (int i = 0; i < 16; ++i) {
            const auto c = Characteristic::from_index(i);
            const auto rule = half_shift(c, k);
            for (int j = 0; j < 5; ++j) {
                const Point2 p = sample_point(s.split(j));
                const cplx lhs = theta2(c, p + shift_vector(k, tau), tau);
                const cplx rhs = rule.factor(p, tau) * theta2(rule.new_characteristic, p, tau);
                CHECK(std::abs(lhs - rhs) / (1 + std::abs(lhs)) < 1e-12);
            }
        }
    }
}

TEST_CASE("full-period shifts preserve the characteristic") {
    for (int i = 0; i < 16; ++i) {
        const auto c = Characteristic::from_index(i);
        CHECK(half_shift(c, ShiftKind::UOne).new_characteristic == c);
        CHECK(half_shift(c, ShiftKind::UTauFull).new_characteristic == c);
    }
}

TEST_CASE("tightening the tolerance leaves values stable") {
    const auto tau = PeriodMatrix::standard();
    const cplx a = theta2(ch("11;01"), kP, tau, {1e-10, 64});
    const cplx b = theta2(ch("11;01"), kP, tau, {1e-16, 64});
    CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("parallel batch equals serial batch") {
    const auto tau = PeriodMatrix::standard();
    const Stream s(11);
    std::vector<Point2> pts;
    for (int i = 0; i < 64; ++i) pts.push_back(sample_point(s.split(i)));
    const auto a = theta2_batch_serial(ch("10;01"), pts, tau);
    const auto b = theta2_batch(ch("10;01"), pts, tau);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
