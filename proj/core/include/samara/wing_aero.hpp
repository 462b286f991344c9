#pragma once

#include <vector>

#include "samara/aero_coefficients.hpp"
#include "samara/geometry.hpp"

namespace samara {

struct StationSolverOptions {
    double tolerance = 1e-9;        // relative MT/BEM mismatch, thrust and torque
    int max_iterations = 200;
    double residual_floor = 1e-12;  // [N/m], guards near-zero-chord stations
    double damping = 0.5;           // fixed-point relaxation
    int fixed_point_iterations = 40;  // then switch to Newton
};

/// Elemental loads per unit span from the momentum balance of an annulus.
struct MomentumLoads {
    double dT_dr;
    double dQ_dr;
};

MomentumLoads momentum_loads(double r, double v_a, double v_theta, double rho) noexcept;

/// Elemental loads per unit span from the blade elements of all airfoils.
struct BladeElementLoads {
    double dT_dr;
    double dQ_dr;
    double epsilon;  // downwash angle, positive when air moves down through the disc
    double alpha;
    double v_b;      // perceived airspeed
};

BladeElementLoads blade_element_loads(double r, double omega, double chord, double beta, double v_a,
                                      double v_theta, const AeroCoefficients& coeffs) noexcept;

struct StationSolution {
    double r = 0.0;
    double chord = 0.0;
    double v_a = 0.0;
    double v_theta = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;
    double v_b = 0.0;
    double dT_dr = 0.0;
    double dQ_dr = 0.0;
    double thrust_residual = 0.0;  // relative
    double torque_residual = 0.0;  // relative
    int iterations = 0;
    bool negative_alpha = false;
};

/// Induced velocities at one radial station such that momentum theory and
/// blade-element loads agree. Throws SolverError (with the last residuals)
/// when the iteration budget runs out.
StationSolution solve_station(double r, double omega, double chord, double beta, const AeroCoefficients& coeffs,
                              const StationSolverOptions& options = {});

struct WingSolverOptions {
    int station_count = 128;
    double reference_omega = 40.0;  // [rad/s]; coefficients do not depend on it
    StationSolverOptions station;
};

struct WingAeroResult {
    double thrust_coefficient = 0.0;  // C_T,R [N s^2]
    double torque_coefficient = 0.0;  // C_Q [N m s^2]
    double omega = 0.0;               // speed the stations were solved at
    std::vector<StationSolution> stations;
    bool any_negative_alpha = false;

    double thrust_at(double omega_rev) const noexcept { return thrust_coefficient * omega_rev * omega_rev; }
    double torque_at(double omega_rev) const noexcept { return torque_coefficient * omega_rev * omega_rev; }
};

/// Midpoint integration over the span of both airfoils at `omega`.
WingAeroResult solve_wing(const WingGeometry& geometry, const AeroCoefficients& coeffs, double omega,
                          const WingSolverOptions& options = {});

/// Total thrust and torque coefficients of the wing pair (solved at
/// options.reference_omega).
WingAeroResult wing_coefficients(const WingGeometry& geometry, const AeroCoefficients& coeffs,
                                 const WingSolverOptions& options = {});

}  // namespace samara
