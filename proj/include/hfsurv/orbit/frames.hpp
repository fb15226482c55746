#pragma once

#include "hfsurv/orbit/earth.hpp"

#include <Eigen/Core>

namespace hfsurv::orbit {

// Earth rotation angle at scenario time t: era0 + rotation_rate * t.
double earth_rotation_angle(const EarthModel& earth, double t);

// Rotation matrix taking ECEF vectors to ECI at time t (rotation about +z by
// the Earth rotation angle). Its transpose goes the other way. Both frames
// are Earth-centered, so positions transform with the rotation alone.
Eigen::Matrix3d ecef_to_eci_matrix(const EarthModel& earth, double t);

Eigen::Vector3d ecef_to_eci(const EarthModel& earth, double t, const Eigen::Vector3d& r_ecef);
Eigen::Vector3d eci_to_ecef(const EarthModel& earth, double t, const Eigen::Vector3d& r_eci);

// Velocity transforms include the frame rotation term omega x r.
Eigen::Vector3d ecef_to_eci_velocity(const EarthModel& earth, double t,
                                     const Eigen::Vector3d& r_ecef,
                                     const Eigen::Vector3d& v_ecef);
Eigen::Vector3d eci_to_ecef_velocity(const EarthModel& earth, double t,
                                     const Eigen::Vector3d& r_eci,
                                     const Eigen::Vector3d& v_eci);

// Spherical-Earth geodetic conversion (the toolkit models a spherical Earth
// throughout, consistent with EarthModel::radius).
Eigen::Vector3d geodetic_to_ecef(const EarthModel& earth, double lat_rad, double lon_rad,
                                 double alt_m);

// East/North/Up unit vectors (columns) at an ECEF position. The matrix maps
// ENU components to ECEF components.
Eigen::Matrix3d enu_basis(const Eigen::Vector3d& r_ecef);

} // namespace hfsurv::orbit
