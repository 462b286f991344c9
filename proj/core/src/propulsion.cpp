#include "samara/propulsion.hpp"

#include <cmath>
#include <numbers>

#include "samara/error.hpp"

namespace samara {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

InducedVelocity induced_velocity(double omega_prop, double axial_inflow, const PropellerParams& prop, double rho) {
    if (!(omega_prop > 0.0)) throw DomainError("propeller speed must be positive");
    if (!(axial_inflow >= 0.0)) throw DomainError("axial inflow must be non-negative");
    if (!(rho > 0.0)) throw DomainError("air density must be positive");

    // A v^2 + B v - C = 0 after dividing both thrust forms by rho.
    const double rp = prop.radius;
    const double n = prop.blade_count;
    const double a = 2.0 * kPi * rp * rp;
    const double b = a * axial_inflow + 0.5 * n * rp * rp * rp * prop.a1 * omega_prop;
    const double c = 0.5 * n * rp * rp * rp * omega_prop * (prop.a0 * rp * omega_prop - prop.a1 * axial_inflow);
    if (c < 0.0) return {0.0, true};
    // b >= 0, so the cancellation-free form of the positive root applies.
    return {2.0 * c / (b + std::sqrt(b * b + 4.0 * a * c)), false};
}

double momentum_thrust(double v_i, double axial_inflow, const PropellerParams& prop, double rho) noexcept {
    return 2.0 * rho * kPi * prop.radius * prop.radius * v_i * (v_i + axial_inflow);
}

double blade_element_thrust(double omega_prop, double v_i, double axial_inflow, const PropellerParams& prop,
                            double rho) noexcept {
    const double rp = prop.radius;
    return 0.5 * rho * prop.blade_count * rp * rp * rp * rp *
           (prop.a0 - prop.a1 * (v_i + axial_inflow) / (omega_prop * rp)) * omega_prop * omega_prop;
}

double propeller_torque(double omega_prop, double v_i, double axial_inflow, double thrust,
                        const PropellerParams& prop, double rho) noexcept {
    const double rp = prop.radius;
    const double profile = 0.5 * rho * prop.blade_count * rp * rp * rp * rp * rp * prop.a2 * omega_prop * omega_prop;
    return profile + thrust * (prop.kappa * v_i + axial_inflow) / omega_prop;
}

double motor_torque(double voltage, double omega_prop, const MotorParams& motor) noexcept {
    return motor.back_emf_k / motor.resistance * (voltage - motor.back_emf_k * omega_prop);
}

PropellerState propeller_at_speed(double omega_prop, double axial_inflow, const PropellerParams& prop, double rho) {
    const auto induced = induced_velocity(omega_prop, axial_inflow, prop, rho);
    PropellerState s;
    s.omega_prop = omega_prop;
    s.axial_inflow = axial_inflow;
    s.v_i = induced.v_i;
    s.thrust = blade_element_thrust(omega_prop, induced.v_i, axial_inflow, prop, rho);
    s.torque = propeller_torque(omega_prop, induced.v_i, axial_inflow, s.thrust, prop, rho);
    s.stalled = induced.stalled || s.thrust <= 0.0;
    return s;
}

PropellerState solve_operating_point(double voltage, double axial_inflow, const PropellerParams& prop,
                                     const MotorParams& motor, double rho) {
    if (!(voltage > 0.0 && voltage <= motor.max_voltage)) {
        throw DomainError("drive voltage must lie in (0, max_voltage]");
    }
    if (!(axial_inflow >= 0.0)) throw DomainError("axial inflow must be non-negative");

    auto balance = [&](double omega) {
        const auto st = propeller_at_speed(omega, axial_inflow, prop, rho);
        return std::pair{motor_torque(voltage, omega, motor) - st.torque, st};
    };

    // balance(0+) > 0: the propeller torque vanishes or turns negative as omega -> 0.
    double lo = 0.0;
    double hi = voltage / motor.back_emf_k;
    auto [g_hi, st_hi] = balance(hi);
    if (g_hi >= 0.0) {
        if (g_hi == 0.0) {
            st_hi.voltage = voltage;
            return st_hi;
        }
        throw SolverError("no motor/propeller torque balance below the back-EMF limit (propeller windmilling?)",
                          g_hi);
    }

    const double torque_scale = motor.back_emf_k / motor.resistance * voltage;
    double omega = 0.5 * hi;
    PropellerState best;
    double g = 0.0;
    for (int it = 0; it < 200; ++it) {
        auto [g_mid, st] = balance(omega);
        g = g_mid;
        best = st;
        if (std::abs(g) <= 1e-15 * torque_scale || hi - lo <= 1e-14 * hi) break;
        if (g > 0.0) {
            lo = omega;
        } else {
            hi = omega;
        }
        // Newton polish with a central-difference slope, bisection when it leaves the bracket.
        const double h = 1e-7 * omega;
        const double slope = (balance(omega + h).first - balance(omega - h).first) / (2.0 * h);
        double next = slope != 0.0 ? omega - g / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        omega = next;
    }
    best.voltage = voltage;
    best.torque_residual = std::abs(g);
    if (!(best.torque_residual < 1e-9)) {
        throw SolverError("motor/propeller torque balance did not converge", best.torque_residual);
    }
    return best;
}

double thrust_map(double voltage, double omega_rev, double mount_radius, const PropellerParams& prop,
                  const MotorParams& motor, double rho) {
    if (!(mount_radius > 0.0)) throw DomainError("mount radius must be positive");
    if (!(omega_rev >= 0.0)) throw DomainError("revolving rate must be non-negative");
    return solve_operating_point(voltage, omega_rev * mount_radius, prop, motor, rho).thrust;
}

}  // namespace samara
