#include "samara/profile.hpp"

#include <numbers>

namespace samara {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

}  // namespace

DesignVector rectangular_seed() { return {21.0 * kDeg, 0.20, 0.20, 0.04, 0.04, 0.04}; }

DesignVector reference_design() {
    return {0.46392151467337106,  0.21760789724040103, 0.20403886671548177,
            0.0030615025560294792, 0.13658310050720399, 0.18755560050848349};
}

double fixed_mass_for_total(const RobotModel& robot, double total_mass) {
    return total_mass - structural_mass(robot.wing, robot.mass, robot.propulsion.mount_radius);
}

RobotModel crazyflie_bench() {
    RobotModel robot;
    robot.aero = AeroCoefficients{1.72, 0.11, 1.94, 1.2};
    robot.propulsion.propeller = PropellerParams{0.023, 2, 0.3633, 1.9960, 0.0022, 1.87};
    robot.propulsion.motor = MotorParams{1.58, 1.1e-3, 3.5};
    robot.mass = MassModel{4.7e-3, 92.6e-3, 0.0};
    robot.environment = Environment{9.81, 0.0};

    const auto design = reference_design();
    robot.wing = design.wing();
    robot.propulsion.mount_radius = design.r_m;
    robot.mass.fixed_mass = fixed_mass_for_total(robot, kReferenceRobotMass);
    return robot;
}

AeroCoefficients refit_coefficients() { return AeroCoefficients{2.67, 0.22, 2.58, 1.2}; }

}  // namespace samara
