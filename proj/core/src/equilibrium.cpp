#include "samara/equilibrium.hpp"

#include <cmath>
#include <sstream>

#include "samara/error.hpp"

namespace samara {
namespace {

bool propeller_thrusting(double omega_rev, double voltage, const PropulsionUnit& p, double rho) {
    try {
        const auto st = solve_operating_point(voltage, omega_rev * p.mount_radius, p.propeller, p.motor, rho);
        return !st.stalled;
    } catch (const SolverError&) {
        return false;
    }
}

}  // namespace

void RobotModel::validate() const {
    wing.validate();
    aero.validate();
    propulsion.validate();
    mass.validate();
    environment.validate();
}

double torque_imbalance(double omega_rev, double voltage, double torque_coefficient, const PropulsionUnit& propulsion,
                        double rho) {
    const double tp = thrust_map(voltage, omega_rev, propulsion.mount_radius, propulsion.propeller, propulsion.motor, rho);
    return 2.0 * propulsion.mount_radius * tp - torque_coefficient * omega_rev * omega_rev;
}

double propeller_stall_limit(double voltage, const PropulsionUnit& propulsion, double rho, const TrimOptions& options) {
    if (propeller_thrusting(options.max_omega, voltage, propulsion, rho)) return options.max_omega;
    double lo = 0.0;
    double hi = options.max_omega;
    for (int i = 0; i < 80 && hi - lo > 1e-12 * options.max_omega; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (propeller_thrusting(mid, voltage, propulsion, rho)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

TrimState solve_trim(double voltage, double thrust_coefficient, double torque_coefficient,
                     const PropulsionUnit& propulsion, double rho, const TrimOptions& options) {
    propulsion.validate();
    if (!(voltage > 0.0 && voltage <= propulsion.motor.max_voltage)) {
        throw DomainError("drive voltage must lie in (0, max_voltage]");
    }
    if (!(torque_coefficient > 0.0)) throw DomainError("torque coefficient must be positive");

    auto f = [&](double omega) { return torque_imbalance(omega, voltage, torque_coefficient, propulsion, rho); };

    double lo = options.min_omega;
    if (!propeller_thrusting(lo, voltage, propulsion, rho) || !(f(lo) > 0.0)) {
        std::ostringstream msg;
        msg << "cannot spin up: at U=" << voltage << " V the propellers cannot drive the wings past "
            << options.min_omega << " rad/s";
        throw TrimError(msg.str());
    }
    double hi = propeller_stall_limit(voltage, propulsion, rho, options);
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_hi > 0.0) {
        std::ostringstream msg;
        msg << "no torque balance below " << hi << " rad/s at U=" << voltage << " V";
        throw TrimError(msg.str(), f_hi);
    }

    // Illinois false position.
    double omega = hi;
    double f_omega = f_hi;
    int side = 0;
    for (int it = 0; it < options.max_iterations; ++it) {
        omega = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        f_omega = f(omega);
        const double scale = torque_coefficient * omega * omega;
        if (std::abs(f_omega) <= 1e-13 * scale || hi - lo <= 1e-15 * hi) break;
        if (f_omega > 0.0) {
            lo = omega;
            f_lo = f_omega;
            if (side == 1) f_hi *= 0.5;
            side = 1;
        } else {
            hi = omega;
            f_hi = f_omega;
            if (side == -1) f_lo *= 0.5;
            side = -1;
        }
    }

    TrimState t;
    t.voltage = voltage;
    t.omega_rev = omega;
    t.thrust = thrust_coefficient * omega * omega;
    t.torque = torque_coefficient * omega * omega;
    t.propeller = solve_operating_point(voltage, omega * propulsion.mount_radius, propulsion.propeller,
                                        propulsion.motor, rho);
    t.torque_residual = std::abs(f_omega) / t.torque;
    if (!(t.torque_residual < options.tolerance)) {
        throw TrimError("trim torque balance did not converge", t.torque_residual);
    }
    return t;
}

TrimState solve_trim(double voltage, const RobotModel& robot, const WingAeroResult& wing, const TrimOptions& options) {
    auto t = solve_trim(voltage, wing.thrust_coefficient, wing.torque_coefficient, robot.propulsion, robot.aero.rho,
                        options);
    t.robot_mass = robot.mass_kg();
    t.payload_margin = t.thrust - t.robot_mass * robot.environment.gravity;
    return t;
}

TrimState solve_trim(double voltage, const RobotModel& robot, const SolverSettings& settings) {
    robot.validate();
    return solve_trim(voltage, robot, wing_coefficients(robot.wing, robot.aero, settings.wing), settings.trim);
}

std::vector<SweepPoint> voltage_sweep(double v_min, double v_max, int steps, const RobotModel& robot,
                                      const SolverSettings& settings) {
    robot.validate();
    if (!(v_min > 0.0 && v_min < v_max && v_max <= robot.propulsion.motor.max_voltage)) {
        throw DomainError("sweep needs 0 < v_min < v_max <= max_voltage");
    }
    if (steps < 2) throw DomainError("sweep needs at least two steps");

    const auto wing = wing_coefficients(robot.wing, robot.aero, settings.wing);
    std::vector<SweepPoint> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        SweepPoint p;
        p.voltage = i == steps - 1 ? v_max : v_min + (v_max - v_min) * i / (steps - 1);
        try {
            p.trim = solve_trim(p.voltage, robot, wing, settings.trim);
        } catch (const Error& e) {
            p.error = e.what();
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace samara
