#pragma once

#include <cmath>

namespace einwarp {

/// Value of a scalar function of the ansatz coordinate together with its
/// first and second derivatives. Arithmetic follows the product and chain
/// rules exactly, so every expression assembled from jets carries exact
/// derivatives up to order two.
struct Jet2 {
    double v = 0.0;   ///< function value
    double d1 = 0.0;  ///< first derivative
    double d2 = 0.0;  ///< second derivative

    static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
    static constexpr Jet2 variable(double x) { return {x, 1.0, 0.0}; }
};

constexpr Jet2 operator+(Jet2 a, Jet2 b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
constexpr Jet2 operator-(Jet2 a, Jet2 b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
constexpr Jet2 operator-(Jet2 a) { return {-a.v, -a.d1, -a.d2}; }
constexpr Jet2 operator*(double c, Jet2 a) { return {c * a.v, c * a.d1, c * a.d2}; }
constexpr Jet2 operator*(Jet2 a, double c) { return c * a; }

/// Leibniz rule: (pq)'' = p''q + 2 p'q' + p q''.
constexpr Jet2 operator*(Jet2 a, Jet2 b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

/// Composition with an outer function given by (g, g', g'') at the inner value.
constexpr Jet2 compose(double g, double dg, double ddg, Jet2 u) {
    return {g, dg * u.d1, ddg * u.d1 * u.d1 + dg * u.d2};
}

inline Jet2 inv(Jet2 a) {
    const double w = 1.0 / a.v;
    return compose(w, -w * w, 2.0 * w * w * w, a);
}

constexpr Jet2 operator/(Jet2 a, Jet2 b) {
    const double v = a.v / b.v;
    const double d1 = (a.d1 - v * b.d1) / b.v;
    const double d2 = (a.d2 - 2.0 * d1 * b.d1 - v * b.d2) / b.v;
    return {v, d1, d2};
}

inline Jet2 exp(Jet2 a) {
    const double e = std::exp(a.v);
    return compose(e, e, e, a);
}

/// Requires a.v > 0.
inline Jet2 log(Jet2 a) {
    const double w = 1.0 / a.v;
    return compose(std::log(a.v), w, -w * w, a);
}

/// Requires a.v > 0 unless p is a nonnegative integer.
inline Jet2 pow(Jet2 a, double p) {
    const double g = std::pow(a.v, p);
    const double dg = p * std::pow(a.v, p - 1.0);
    const double ddg = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return compose(g, dg, ddg, a);
}

inline Jet2 cosh(Jet2 a) {
    const double c = std::cosh(a.v), s = std::sinh(a.v);
    return compose(c, s, c, a);
}

inline Jet2 sinh(Jet2 a) {
    const double c = std::cosh(a.v), s = std::sinh(a.v);
    return compose(s, c, s, a);
}

inline Jet2 tanh(Jet2 a) {
    const double t = std::tanh(a.v);
    const double s2 = 1.0 - t * t;  // sech^2
    return compose(t, s2, -2.0 * s2 * t, a);
}

inline Jet2 sech(Jet2 a) {
    const double t = std::tanh(a.v);
    const double s = 1.0 / std::cosh(a.v);
    return compose(s, -s * t, s * (t * t - s * s), a);
}

/// Requires a.v != 0.
inline Jet2 coth(Jet2 a) {
    const double c = 1.0 / std::tanh(a.v);
    const double cs2 = c * c - 1.0;  // csch^2
    return compose(c, -cs2, 2.0 * cs2 * c, a);
}

inline Jet2 sqrt(Jet2 a) { return pow(a, 0.5); }

}  // namespace einwarp
