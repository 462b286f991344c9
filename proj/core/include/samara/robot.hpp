#pragma once

#include <numbers>

#include "samara/aero_coefficients.hpp"
#include "samara/geometry.hpp"
#include "samara/parameters.hpp"
#include "samara/wing_aero.hpp"

namespace samara {

struct TrimOptions {
    double min_omega = 2.0 * std::numbers::pi;  // [rad/s] slower than 1 rev/s is not considered spinning
    double max_omega = 200.0;  // [rad/s] upper bracket when the propellers never stall
    double tolerance = 1e-6;   // relative torque-balance residual
    int max_iterations = 200;

    friend bool operator==(const TrimOptions&, const TrimOptions&) = default;
};

struct SolverSettings {
    WingSolverOptions wing;
    TrimOptions trim;
};

/// Everything needed to predict hover of one robot.
struct RobotModel {
    WingGeometry wing;
    AeroCoefficients aero;
    PropulsionUnit propulsion;
    MassModel mass;
    Environment environment;

    void validate() const;
    double mass_kg() const { return robot_mass(wing, mass, propulsion.mount_radius); }
    double weight() const { return mass_kg() * environment.gravity; }
};

}  // namespace samara
