#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g2 {

using cplx = std::complex<double>;

enum class ErrorKind {
    TruncationOverflow,
    DegenerateTau,
    DivisionByZeroModulus,
    SingularDenominator,
    CoincidentPoints,
    InvalidFactorIndex,
    SingularJacobian,
    TildeMismatch,
    StencilCrossesDivisor,
    QuadratureNonconvergence,
    ConfigInvalid,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Throws an Error of the given kind with the message prefixed by its name.
[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

struct Point2 {
    cplx u{}, v{};
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.u + b.u, a.v + b.v}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.u - b.u, a.v - b.v}; }
inline Point2 operator-(Point2 a) { return {-a.u, -a.v}; }

struct PeriodMatrix {
    cplx tau1, tau2, tau12;

    // Im tau1 > 0 and det Im tau > 0.
    bool valid() const;
    // Throws DegenerateTau when !valid().
    void check() const;
    // Smallest eigenvalue of Im tau.
    double lambda_min() const;

    static PeriodMatrix standard();
};

struct SeriesControl {
    double tol = 1e-14;
    int max_radius = 64;

    void check() const;
};

// Half-integer characteristic, layout [a c; b d].
struct Characteristic {
    int a = 0, c = 0, b = 0, d = 0;

    constexpr Characteristic() = default;
    constexpr Characteristic(int a_, int c_, int b_, int d_) : a(a_), c(c_), b(b_), d(d_) {}

    // Parses "ac;bd", e.g. "10;11".
    static Characteristic parse(std::string_view s);
    std::string str() const;
    int index() const { return (a << 3) | (c << 2) | (b << 1) | d; }
    static Characteristic from_index(int i) { return {(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1}; }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

// Compile-time characteristic literal: ch("10;11").
consteval Characteristic ch(const char (&s)[6]) {
    return {s[0] - '0', s[1] - '0', s[3] - '0', s[4] - '0'};
}

// |lhs - rhs| / (1 + largest magnitude among terms).
double rel_residual(cplx lhs, cplx rhs, std::initializer_list<cplx> terms);
double rel_residual(cplx lhs, cplx rhs);

}  // namespace g2
