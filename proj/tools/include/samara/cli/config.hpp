#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "samara/calibration.hpp"
#include "samara/optimizer.hpp"
#include "samara/robot.hpp"

namespace samara::cli {

// Robot configuration in file units. Keys carry their unit in the name;
// conversion to SI happens only in to_robot()/to_settings()/to_context().

struct GeometrySection {
    double pitch_deg = 0.0;
    double r_tip_mm = 0.0;
    double c1_mm = 0.0;
    double c2_mm = 0.0;
    double c3_mm = 0.0;
};

struct PropulsionSection {
    double r_m_mm = 0.0;
    double prop_radius_mm = 0.0;
    double blade_count = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double kappa = 0.0;
    double motor_resistance_ohm = 0.0;
    double motor_k_mV_s_per_rad = 0.0;
    double max_voltage_V = 0.0;
};

struct MassSection {
    double rod_density_g_per_m = 0.0;
    double wing_density_g_per_m2 = 0.0;
    double fixed_mass_g = 0.0;
};

struct AeroSection {
    double c_l1 = 0.0;
    double c_d0 = 0.0;
    double c_d1 = 0.0;
    double rho_kg_per_m3 = 0.0;
};

struct EnvironmentSection {
    double gravity_m_per_s2 = 0.0;
    double free_stream_m_per_s = 0.0;
};

struct SolverSection {
    double station_count = 0.0;
    double station_tolerance = 0.0;
    double station_max_iterations = 0.0;
    double reference_omega_rad_s = 0.0;
    double trim_tolerance = 0.0;
    double trim_min_omega_rad_s = 0.0;
    double trim_max_omega_rad_s = 0.0;
};

struct OptimizerSection {
    double voltage_V = 0.0;
    double penalty_weight_N = 0.0;
    double max_evaluations = 0.0;
    double spread_tolerance_N = 0.0;
    double r_tip_max_mm = 0.0;
};

struct RobotConfig {
    GeometrySection geometry;
    PropulsionSection propulsion;
    MassSection mass;
    AeroSection aero;
    EnvironmentSection environment;
    SolverSection solver;
    OptimizerSection optimizer;
};

/// Built-in parameter profile in file units. Throws InputError for unknown names.
RobotConfig profile_config(std::string_view name);

/// Applies `section`/`key = value` lines from `in` on top of `base`.
/// Unknown sections or keys, duplicates and malformed numbers are InputErrors.
RobotConfig parse_config(std::istream& in, const RobotConfig& base, std::string_view source = "config");
RobotConfig load_config(const std::string& path, const RobotConfig& base);

/// Writes the listed sections (all when empty). Numbers use the shortest
/// representation that parses back to the same double.
void write_config(std::ostream& out, const RobotConfig& config, std::span<const std::string_view> sections = {});

RobotModel to_robot(const RobotConfig& config);
SolverSettings to_settings(const RobotConfig& config);
OptimizationContext to_context(const RobotConfig& config);
OptimizerOptions to_optimizer_options(const RobotConfig& config);

void set_design(RobotConfig& config, const DesignVector& design);
void set_aero(RobotConfig& config, const AeroCoefficients& coeffs);

/// One `<robot_id>.cfg` per robot in `directory`, each layered on `base`.
std::map<std::string, WingGeometry> load_geometry_registry(const std::string& directory, const RobotConfig& base);

}  // namespace samara::cli
