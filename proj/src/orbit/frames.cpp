#include "hfsurv/orbit/frames.hpp"

#include "hfsurv/core/error.hpp"

#include <cmath>

namespace hfsurv::orbit {

double earth_rotation_angle(const EarthModel& earth, double t) {
    return earth.era0 + earth.rotation_rate * t;
}

Eigen::Matrix3d ecef_to_eci_matrix(const EarthModel& earth, double t) {
    const double a = earth_rotation_angle(earth, t);
    const double c = std::cos(a);
    const double s = std::sin(a);
    Eigen::Matrix3d m;
    m << c, -s, 0.0,
         s,  c, 0.0,
         0.0, 0.0, 1.0;
    return m;
}

Eigen::Vector3d ecef_to_eci(const EarthModel& earth, double t, const Eigen::Vector3d& r_ecef) {
    return ecef_to_eci_matrix(earth, t) * r_ecef;
}

Eigen::Vector3d eci_to_ecef(const EarthModel& earth, double t, const Eigen::Vector3d& r_eci) {
    return ecef_to_eci_matrix(earth, t).transpose() * r_eci;
}

Eigen::Vector3d ecef_to_eci_velocity(const EarthModel& earth, double t,
                                     const Eigen::Vector3d& r_ecef,
                                     const Eigen::Vector3d& v_ecef) {
    const Eigen::Vector3d omega(0.0, 0.0, earth.rotation_rate);
    const Eigen::Vector3d r_eci = ecef_to_eci(earth, t, r_ecef);
    return ecef_to_eci(earth, t, v_ecef) + omega.cross(r_eci);
}

Eigen::Vector3d eci_to_ecef_velocity(const EarthModel& earth, double t,
                                     const Eigen::Vector3d& r_eci,
                                     const Eigen::Vector3d& v_eci) {
    const Eigen::Vector3d omega(0.0, 0.0, earth.rotation_rate);
    return eci_to_ecef(earth, t, v_eci - omega.cross(r_eci));
}

Eigen::Vector3d geodetic_to_ecef(const EarthModel& earth, double lat_rad, double lon_rad,
                                 double alt_m) {
    const double r = earth.radius + alt_m;
    return {r * std::cos(lat_rad) * std::cos(lon_rad),
            r * std::cos(lat_rad) * std::sin(lon_rad),
            r * std::sin(lat_rad)};
}

Eigen::Matrix3d enu_basis(const Eigen::Vector3d& r_ecef) {
    const double rn = r_ecef.norm();
    if (rn <= 0.0) throw Error("enu_basis: zero position");
    const Eigen::Vector3d up = r_ecef / rn;
    Eigen::Vector3d east = Eigen::Vector3d::UnitZ().cross(up);
    const double en = east.norm();
    if (en < 1e-12) {
        // Pole: pick east along +y by convention.
        east = Eigen::Vector3d::UnitY();
    } else {
        east /= en;
    }
    const Eigen::Vector3d north = up.cross(east);
    Eigen::Matrix3d m;
    m.col(0) = east;
    m.col(1) = north;
    m.col(2) = up;
    return m;
}

} // namespace hfsurv::orbit
