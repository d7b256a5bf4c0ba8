#include "g2/core.hpp"

#include <algorithm>
#include <cmath>

namespace g2 {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::TruncationOverflow: return "TruncationOverflow";
        case ErrorKind::DegenerateTau: return "DegenerateTau";
        case ErrorKind::DivisionByZeroModulus: return "DivisionByZeroModulus";
        case ErrorKind::SingularDenominator: return "SingularDenominator";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::InvalidFactorIndex: return "InvalidFactorIndex";
        case ErrorKind::SingularJacobian: return "SingularJacobian";
        case ErrorKind::TildeMismatch: return "TildeMismatch";
        case ErrorKind::StencilCrossesDivisor: return "StencilCrossesDivisor";
        case ErrorKind::QuadratureNonconvergence: return "QuadratureNonconvergence";
        case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, std::string(error_name(kind)) + ": " + msg);
}

bool PeriodMatrix::valid() const {
    const double y1 = tau1.imag(), y2 = tau2.imag(), y12 = tau12.imag();
    if (!std::isfinite(y1) || !std::isfinite(y2) || !std::isfinite(y12)) return false;
    if (!std::isfinite(tau1.real()) || !std::isfinite(tau2.real()) || !std::isfinite(tau12.real()))
        return false;
    return y1 > 0 && y1 * y2 - y12 * y12 > 0;
}

void PeriodMatrix::check() const {
    if (!valid()) fail(ErrorKind::DegenerateTau, "Im tau is not positive definite");
}

double PeriodMatrix::lambda_min() const {
    const double y1 = tau1.imag(), y2 = tau2.imag(), y12 = tau12.imag();
    const double m = 0.5 * (y1 + y2);
    const double r = std::hypot(0.5 * (y1 - y2), y12);
    return m - r;
}

PeriodMatrix PeriodMatrix::standard() {
    return {{0.1, 1.1}, {-0.15, 1.3}, {0.05, 0.25}};
}

void SeriesControl::check() const {
    if (!(tol > 0) || !std::isfinite(tol)) fail(ErrorKind::ConfigInvalid, "series tol must be positive");
    if (max_radius < 4) fail(ErrorKind::ConfigInvalid, "series max_radius must be >= 4");
}

Characteristic Characteristic::parse(std::string_view s) {
    auto bit = [&](char x) {
        if (x != '0' && x != '1') fail(ErrorKind::ConfigInvalid, "bad characteristic '" + std::string(s) + "'");
        return x - '0';
    };
    if (s.size() != 5 || s[2] != ';') fail(ErrorKind::ConfigInvalid, "bad characteristic '" + std::string(s) + "'");
    return {bit(s[0]), bit(s[1]), bit(s[3]), bit(s[4])};
}

std::string Characteristic::str() const {
    std::string s = "00;00";
    s[0] = char('0' + a);
    s[1] = char('0' + c);
    s[3] = char('0' + b);
    s[4] = char('0' + d);
    return s;
}

double rel_residual(cplx lhs, cplx rhs, std::initializer_list<cplx> terms) {
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    for (auto t : terms) scale = std::max(scale, std::abs(t));
    return std::abs(lhs - rhs) / (1.0 + scale);
}

double rel_residual(cplx lhs, cplx rhs) { return rel_residual(lhs, rhs, {}); }

}  // namespace g2
