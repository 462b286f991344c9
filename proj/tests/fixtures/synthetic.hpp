#pragma once

#include <cstdint>
#include <vector>

#include "samara/aero_coefficients.hpp"
#include "samara/calibration.hpp"
#include "samara/equilibrium.hpp"

namespace samara::fixture {

inline constexpr std::uint64_t kNoiseSeed = 20240917;
inline constexpr double kNoiseLevel = 0.03;
inline constexpr int kPointsPerRobot = 14;

inline AeroCoefficients generating_coefficients() { return {2.0, 0.15, 2.2, 1.2}; }

// Mirrors a bench sweep: each robot is logged at its own trim speeds over 2.3-3.5 V.
inline std::vector<MeasurementRecord> clean_records(const std::map<std::string, WingGeometry>& geometries,
                                                    const PropulsionUnit& propulsion,
                                                    const WingSolverOptions& wing_options) {
    const auto coeffs = generating_coefficients();
    std::vector<MeasurementRecord> out;
    for (const auto& [id, wing] : geometries) {
        const auto aero = wing_coefficients(wing, coeffs, wing_options);
        for (int i = 0; i < kPointsPerRobot; ++i) {
            const double u = 2.3 + 1.2 * i / (kPointsPerRobot - 1);
            const double omega =
                solve_trim(u, aero.thrust_coefficient, aero.torque_coefficient, propulsion, coeffs.rho).omega_rev;
            out.push_back({id, omega, aero.thrust_at(omega)});
        }
    }
    return out;
}

}  // namespace samara::fixture
