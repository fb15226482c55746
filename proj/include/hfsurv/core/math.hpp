#pragma once

#include <cmath>
#include <numbers>

namespace hfsurv {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Wrap x into [0, period).
inline double wrap_positive(double x, double period) {
    double y = std::fmod(x, period);
    if (y < 0.0) y += period;
    // fmod of a tiny negative can round to exactly `period`
    if (y >= period) y -= period;
    return y;
}

// Wrap x into [-period/2, period/2).
inline double wrap_centered(double x, double period) {
    return wrap_positive(x + 0.5 * period, period) - 0.5 * period;
}

// Signed distance from a to b on a circle of the given period, in
// [-period/2, period/2).
inline double wrap_distance(double a, double b, double period) {
    return wrap_centered(b - a, period);
}

// Wrap angle into [-pi, pi).
inline double wrap_angle(double x) { return wrap_centered(x, kTwoPi); }

inline double sqr(double x) { return x * x; }

} // namespace hfsurv
