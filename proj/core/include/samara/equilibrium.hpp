#pragma once

#include <optional>
#include <string>
#include <vector>

#include "samara/propulsion.hpp"
#include "samara/robot.hpp"

namespace samara {

struct TrimState {
    double voltage = 0.0;    // U [V]
    double omega_rev = 0.0;  // Omega [rad/s]
    double thrust = 0.0;     // T_R [N]
    double torque = 0.0;     // Q [N m]
    PropellerState propeller;
    double robot_mass = 0.0;      // [kg], 0 when not supplied
    double payload_margin = 0.0;  // T_R - m g [N]
    double torque_residual = 0.0;  // |2 R_m T_p - Q| / Q
};

/// f(Omega) = 2 R_m T_p(U, Omega) - C_Q Omega^2; its positive root is the hover trim.
double torque_imbalance(double omega_rev, double voltage, double torque_coefficient, const PropulsionUnit& propulsion,
                        double rho);

/// Largest Omega in (0, max_omega] at which the propellers still produce
/// positive thrust at voltage U.
double propeller_stall_limit(double voltage, const PropulsionUnit& propulsion, double rho,
                             const TrimOptions& options = {});

/// Trim from precomputed wing coefficients. Throws TrimError when the
/// propellers cannot spin the wings up past options.min_omega.
TrimState solve_trim(double voltage, double thrust_coefficient, double torque_coefficient,
                     const PropulsionUnit& propulsion, double rho, const TrimOptions& options = {});

/// Full trim: wing coefficients, torque balance, payload margin.
TrimState solve_trim(double voltage, const RobotModel& robot, const SolverSettings& settings = {});

/// Same, reusing wing coefficients already computed for `robot`.
TrimState solve_trim(double voltage, const RobotModel& robot, const WingAeroResult& wing,
                     const TrimOptions& options = {});

struct SweepPoint {
    double voltage = 0.0;
    std::optional<TrimState> trim;
    std::string error;  // set when trim is empty
};

/// Trim at `steps` uniformly spaced voltages; failures are reported per point.
std::vector<SweepPoint> voltage_sweep(double v_min, double v_max, int steps, const RobotModel& robot,
                                      const SolverSettings& settings = {});

}  // namespace samara
