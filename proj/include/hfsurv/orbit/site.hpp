#pragma once

#include "hfsurv/orbit/earth.hpp"
#include "hfsurv/orbit/frames.hpp"

#include <Eigen/Core>

namespace hfsurv::orbit {

// Ground sensor site, fixed in ECEF.
struct Site {
    double lat_rad = 0.0;
    double lon_rad = 0.0;
    double alt_m = 0.0;

    Eigen::Vector3d ecef(const EarthModel& earth) const {
        return geodetic_to_ecef(earth, lat_rad, lon_rad, alt_m);
    }
};

// Position, velocity and acceleration of an ECEF-fixed point expressed in
// ECI at time t. The point co-rotates with the Earth, so v = omega x r and
// a = omega x (omega x r).
struct SiteKinematics {
    Eigen::Vector3d r;
    Eigen::Vector3d v;
    Eigen::Vector3d a;
};

inline SiteKinematics site_kinematics_eci(const EarthModel& earth, const Site& site, double t) {
    const Eigen::Vector3d omega(0.0, 0.0, earth.rotation_rate);
    SiteKinematics k;
    k.r = ecef_to_eci(earth, t, site.ecef(earth));
    k.v = omega.cross(k.r);
    k.a = omega.cross(k.v);
    return k;
}

} // namespace hfsurv::orbit
