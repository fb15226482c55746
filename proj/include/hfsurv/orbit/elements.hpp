#pragma once

#include "hfsurv/orbit/earth.hpp"
#include "hfsurv/orbit/state.hpp"

namespace hfsurv::orbit {

// Classical element set from a Cartesian state. Handles the standard
// degeneracies by convention: circular orbits report arg_perigee = 0 with the
// argument of latitude folded into true_anomaly; equatorial orbits report
// raan = 0 with the node direction taken along +x. Degenerate (zero angular
// momentum) states throw.
KeplerianElements elements_from_state(const EarthModel& earth, const StateVector& s);

// Cartesian state from elements at time t. Valid for any conic with
// p = a(1 - e^2) > 0; rectilinear sets throw.
StateVector state_from_elements(const EarthModel& earth, const KeplerianElements& el, double t);

double mean_motion(const EarthModel& earth, double semi_major_axis);
double orbital_period(const EarthModel& earth, double semi_major_axis);

// Anomaly conversions for closed orbits (e < 1).
double eccentric_from_true_anomaly(double true_anomaly, double e);
double true_from_eccentric_anomaly(double ecc_anomaly, double e);
double mean_from_eccentric_anomaly(double ecc_anomaly, double e);
// Kepler's equation, solved by Newton iteration.
double eccentric_from_mean_anomaly(double mean_anomaly, double e);

// Same orbit, displaced along track by dt seconds of two-body motion
// (elements -> mean anomaly += n*dt -> state). The returned state keeps the
// original timestamp: it answers "where would the object be if it ran dt
// seconds ahead of schedule".
StateVector shift_along_track(const EarthModel& earth, const StateVector& s, double dt);

} // namespace hfsurv::orbit
