#pragma once

#include <string_view>

#include "samara/optimizer.hpp"
#include "samara/robot.hpp"

namespace samara {

/// Name of the built-in bench parameter set.
inline constexpr std::string_view kCrazyflieBench = "crazyflie-bench";

/// Total mass of the reference robot with the optimal wing [kg].
inline constexpr double kReferenceRobotMass = 0.0138;

/// Rectangular-wing starting design: constant control chords, beta = 21 deg.
DesignVector rectangular_seed();

/// Optimum reached by optimize() from rectangular_seed() with the bench
/// parameters; frozen so predictions need no optimizer run.
DesignVector reference_design();

/// Bench robot: Crazyflie 2.0 motors and propellers, flat-plate wing
/// coefficients, wing = reference_design(), fixed mass chosen so the whole
/// robot weighs kReferenceRobotMass.
RobotModel crazyflie_bench();

/// Fixed mass that brings `robot` (wing + airframe) to `total_mass`.
double fixed_mass_for_total(const RobotModel& robot, double total_mass);

/// Refit wing coefficients from the bench measurements.
AeroCoefficients refit_coefficients();

}  // namespace samara
