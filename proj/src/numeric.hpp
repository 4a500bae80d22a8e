#pragma once

#include <cmath>
#include <numbers>

namespace rootdisk {

// Wraps an angle to the principal range (-pi, pi].
inline double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(theta, two_pi);
    if (w <= -std::numbers::pi) w += two_pi;
    if (w > std::numbers::pi) w -= two_pi;
    return w;
}

// Shortest angular distance between two directions, in [0, pi].
inline double angular_distance(double a, double b) {
    return std::abs(wrap_angle(a - b));
}

// x / t^e, falling back to log-space when t^e leaves the double range.
// t must be positive.
inline double pow_quotient(double x, double t, int e) {
    if (x == 0.0) return 0.0;
    const double log_denom = static_cast<double>(e) * std::log(t);
    if (std::abs(log_denom) < 600.0) {
        return x / std::pow(t, static_cast<double>(e));
    }
    const double mag = std::exp(std::log(std::abs(x)) - log_denom);
    return x < 0.0 ? -mag : mag;
}

}  // namespace rootdisk
