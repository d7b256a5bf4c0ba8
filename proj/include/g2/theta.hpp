#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "g2/core.hpp"

namespace g2 {

// Values of all 16 characteristics at one point, indexed by Characteristic::index().
struct ThetaTable {
    std::array<cplx, 16> v{};
    cplx operator[](Characteristic c) const { return v[c.index()]; }
    cplx& operator[](Characteristic c) { return v[c.index()]; }
};

struct ThetaJet {
    cplx value, du, dv;
};

struct ThetaJetTable {
    std::array<ThetaJet, 16> v{};
    const ThetaJet& operator[](Characteristic c) const { return v[c.index()]; }
};

// Smallest box radius N whose Gaussian tail bound falls below ctrl.tol relative
// to the dominant term. Throws TruncationOverflow past ctrl.max_radius.
int truncation_radius(const PeriodMatrix& tau, Point2 p, const SeriesControl& ctrl = {});

cplx theta2(Characteristic ch, Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl = {});
std::pair<cplx, cplx> theta2_grad(Characteristic ch, Point2 p, const PeriodMatrix& tau,
                                  const SeriesControl& ctrl = {});
ThetaJet theta2_jet(Characteristic ch, Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl = {});

// Fixed-radius sum over |m|,|n| <= radius, no truncation control.
cplx theta2_box(Characteristic ch, Point2 p, const PeriodMatrix& tau, int radius);

// All 16 characteristics from one pass over the lattice; the b,d bits only
// change signs of the (a,c) terms.
ThetaTable theta2_all(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl = {});
ThetaJetTable theta2_jet_all(Point2 p, const PeriodMatrix& tau, const SeriesControl& ctrl = {});

int parity(Characteristic ch);
bool is_odd(Characteristic ch);
const std::array<Characteristic, 6>& odd_characteristics();
const std::array<Characteristic, 10>& even_characteristics();

enum class ShiftKind { UHalf, UTauHalf, UTauPlusHalf, UOne, UTauFull };
inline constexpr std::array<ShiftKind, 5> all_shift_kinds{ShiftKind::UHalf, ShiftKind::UTauHalf,
                                                         ShiftKind::UTauPlusHalf, ShiftKind::UOne,
                                                         ShiftKind::UTauFull};
const char* shift_name(ShiftKind k);

struct Rational {
    int num = 0, den = 1;
    double value() const { return double(num) / den; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// theta[ch](p + shift) = sign * exp(pi i (tau1_coeff * tau1 + u_coeff * u)) * theta[new_characteristic](p)
struct ShiftRule {
    Characteristic new_characteristic;
    cplx sign{1.0, 0.0};
    Rational tau1_coeff{};
    Rational u_coeff{};

    cplx factor(Point2 p, const PeriodMatrix& tau) const;
};

ShiftRule half_shift(Characteristic ch, ShiftKind kind);
Point2 shift_vector(ShiftKind kind, const PeriodMatrix& tau);

// Batch evaluation of one characteristic over many points.
std::vector<cplx> theta2_batch_serial(Characteristic ch, std::span<const Point2> pts, const PeriodMatrix& tau,
                                      const SeriesControl& ctrl = {});
std::vector<cplx> theta2_batch(Characteristic ch, std::span<const Point2> pts, const PeriodMatrix& tau,
                               const SeriesControl& ctrl = {});

}  // namespace g2
