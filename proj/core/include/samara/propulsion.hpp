#pragma once

#include "samara/parameters.hpp"

namespace samara {

struct InducedVelocity {
    double v_i = 0.0;      // [m/s]
    bool stalled = false;  // blade-element thrust <= 0 for every v_i >= 0
};

/// Uniform axial induced velocity at which momentum thrust equals
/// blade-element thrust, solved in closed form. axial_inflow is u = Omega R_m.
InducedVelocity induced_velocity(double omega_prop, double axial_inflow, const PropellerParams& prop, double rho);

/// T_p = 2 rho pi R_p^2 v_i (v_i + u)
double momentum_thrust(double v_i, double axial_inflow, const PropellerParams& prop, double rho) noexcept;

/// T_p = 1/2 rho n R_p^4 (a0 - a1 (v_i + u) / (omega R_p)) omega^2
double blade_element_thrust(double omega_prop, double v_i, double axial_inflow, const PropellerParams& prop,
                            double rho) noexcept;

/// tau_p = 1/2 rho n R_p^5 a2 omega^2 + T_p (kappa v_i + u) / omega
double propeller_torque(double omega_prop, double v_i, double axial_inflow, double thrust,
                        const PropellerParams& prop, double rho) noexcept;

/// Steady-state shaft torque delivered by the motor, k/R_i (U - k omega).
double motor_torque(double voltage, double omega_prop, const MotorParams& motor) noexcept;

struct PropellerState {
    double voltage = 0.0;
    double omega_prop = 0.0;    // omega [rad/s]
    double v_i = 0.0;           // [m/s]
    double thrust = 0.0;        // T_p [N]
    double torque = 0.0;        // tau_p [N m]
    double axial_inflow = 0.0;  // u [m/s]
    double torque_residual = 0.0;  // |motor - propeller| [N m]
    bool stalled = false;
};

/// Propeller aerodynamics at a prescribed spin rate (no motor coupling).
PropellerState propeller_at_speed(double omega_prop, double axial_inflow, const PropellerParams& prop, double rho);

/// Spin rate where motor torque balances propeller torque at voltage U.
/// Throws SolverError if no root lies in (0, U/k].
PropellerState solve_operating_point(double voltage, double axial_inflow, const PropellerParams& prop,
                                     const MotorParams& motor, double rho);

/// T_p(U, Omega): thrust of one propeller mounted at r_m on a robot revolving at omega_rev.
double thrust_map(double voltage, double omega_rev, double mount_radius, const PropellerParams& prop,
                  const MotorParams& motor, double rho);

}  // namespace samara
