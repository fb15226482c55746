#pragma once

#include <Eigen/Core>

namespace hfsurv::orbit {

// Inertial Cartesian state at a scenario time (seconds from scenario epoch).
struct StateVector {
    double t = 0.0;        // s
    Eigen::Vector3d r;     // ECI position, m
    Eigen::Vector3d v;     // ECI velocity, m/s
};

// Classical orbital elements. Angles in radians. For hyperbolic states
// semi_major_axis is negative and eccentricity > 1; such states are reported
// by elements_from_state but are not valid inputs to state_from_elements.
struct KeplerianElements {
    double semi_major_axis = 0.0; // m
    double eccentricity = 0.0;
    double inclination = 0.0;     // [0, pi]
    double raan = 0.0;            // right ascension of ascending node
    double arg_perigee = 0.0;
    double true_anomaly = 0.0;
};

} // namespace hfsurv::orbit
