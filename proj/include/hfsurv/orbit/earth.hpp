#pragma once

namespace hfsurv::orbit {

// Earth constants. Defaults are the scenario-schema defaults; scenarios may
// override any of them.
struct EarthModel {
    double mu = 3.986004418e14;        // gravitational parameter, m^3/s^2
    double radius = 6378137.0;         // spherical Earth radius, m
    double rotation_rate = 7.2921159e-5; // rad/s, about +z
    double j2 = 1.08263e-3;            // second zonal harmonic coefficient
    double era0 = 0.0;                 // Earth rotation angle at t = 0, rad
};

} // namespace hfsurv::orbit
