#include "samara/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "samara/error.hpp"
#include "samara/profile.hpp"

namespace samara::cli {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Field {
    std::string_view section;
    std::string_view key;
    double& (*ref)(RobotConfig&);
    bool integral = false;
};

#define SAMARA_FIELD(sec, member, integral) \
    Field { #sec, #member, [](RobotConfig& c) -> double& { return c.sec.member; }, integral }

const std::vector<Field>& schema() {
    static const std::vector<Field> fields{
        SAMARA_FIELD(geometry, pitch_deg, false),
        SAMARA_FIELD(geometry, r_tip_mm, false),
        SAMARA_FIELD(geometry, c1_mm, false),
        SAMARA_FIELD(geometry, c2_mm, false),
        SAMARA_FIELD(geometry, c3_mm, false),
        SAMARA_FIELD(propulsion, r_m_mm, false),
        SAMARA_FIELD(propulsion, prop_radius_mm, false),
        SAMARA_FIELD(propulsion, blade_count, true),
        SAMARA_FIELD(propulsion, a0, false),
        SAMARA_FIELD(propulsion, a1, false),
        SAMARA_FIELD(propulsion, a2, false),
        SAMARA_FIELD(propulsion, kappa, false),
        SAMARA_FIELD(propulsion, motor_resistance_ohm, false),
        SAMARA_FIELD(propulsion, motor_k_mV_s_per_rad, false),
        SAMARA_FIELD(propulsion, max_voltage_V, false),
        SAMARA_FIELD(mass, rod_density_g_per_m, false),
        SAMARA_FIELD(mass, wing_density_g_per_m2, false),
        SAMARA_FIELD(mass, fixed_mass_g, false),
        SAMARA_FIELD(aero, c_l1, false),
        SAMARA_FIELD(aero, c_d0, false),
        SAMARA_FIELD(aero, c_d1, false),
        SAMARA_FIELD(aero, rho_kg_per_m3, false),
        SAMARA_FIELD(environment, gravity_m_per_s2, false),
        SAMARA_FIELD(environment, free_stream_m_per_s, false),
        SAMARA_FIELD(solver, station_count, true),
        SAMARA_FIELD(solver, station_tolerance, false),
        SAMARA_FIELD(solver, station_max_iterations, true),
        SAMARA_FIELD(solver, reference_omega_rad_s, false),
        SAMARA_FIELD(solver, trim_tolerance, false),
        SAMARA_FIELD(solver, trim_min_omega_rad_s, false),
        SAMARA_FIELD(solver, trim_max_omega_rad_s, false),
        SAMARA_FIELD(optimizer, voltage_V, false),
        SAMARA_FIELD(optimizer, penalty_weight_N, false),
        SAMARA_FIELD(optimizer, max_evaluations, true),
        SAMARA_FIELD(optimizer, spread_tolerance_N, false),
        SAMARA_FIELD(optimizer, r_tip_max_mm, false),
    };
    return fields;
}

#undef SAMARA_FIELD

std::string_view trim_ws(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

int as_int(double v) { return static_cast<int>(v); }

// Drops the last-digit noise left by SI -> file-unit scaling (92.6 rather than 92.60000000000001).
double tidy(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace

RobotConfig profile_config(std::string_view name) {
    if (name != kCrazyflieBench) throw InputError("unknown profile '" + std::string(name) + "'");
    const RobotModel robot = crazyflie_bench();
    const SolverSettings settings;
    const OptimizationContext ctx;
    const OptimizerOptions opt;

    RobotConfig c;
    set_design(c, DesignVector::from_robot(robot));
    const auto& p = robot.propulsion;
    c.propulsion.prop_radius_mm = tidy(p.propeller.radius * 1e3);
    c.propulsion.blade_count = p.propeller.blade_count;
    c.propulsion.a0 = p.propeller.a0;
    c.propulsion.a1 = p.propeller.a1;
    c.propulsion.a2 = p.propeller.a2;
    c.propulsion.kappa = p.propeller.kappa;
    c.propulsion.motor_resistance_ohm = p.motor.resistance;
    c.propulsion.motor_k_mV_s_per_rad = tidy(p.motor.back_emf_k * 1e3);
    c.propulsion.max_voltage_V = p.motor.max_voltage;
    c.mass.rod_density_g_per_m = tidy(robot.mass.rod_linear_density * 1e3);
    c.mass.wing_density_g_per_m2 = tidy(robot.mass.wing_areal_density * 1e3);
    c.mass.fixed_mass_g = tidy(robot.mass.fixed_mass * 1e3);
    set_aero(c, robot.aero);
    c.environment.gravity_m_per_s2 = robot.environment.gravity;
    c.environment.free_stream_m_per_s = robot.environment.free_stream;
    c.solver.station_count = settings.wing.station_count;
    c.solver.station_tolerance = settings.wing.station.tolerance;
    c.solver.station_max_iterations = settings.wing.station.max_iterations;
    c.solver.reference_omega_rad_s = settings.wing.reference_omega;
    c.solver.trim_tolerance = settings.trim.tolerance;
    c.solver.trim_min_omega_rad_s = settings.trim.min_omega;
    c.solver.trim_max_omega_rad_s = settings.trim.max_omega;
    c.optimizer.voltage_V = ctx.voltage;
    c.optimizer.penalty_weight_N = ctx.penalty_weight;
    c.optimizer.max_evaluations = static_cast<double>(opt.nelder_mead.max_evaluations);
    c.optimizer.spread_tolerance_N = opt.nelder_mead.spread_tolerance;
    c.optimizer.r_tip_max_mm = tidy(ctx.constraints.max_tip_radius * 1e3);
    return c;
}

RobotConfig parse_config(std::istream& in, const RobotConfig& base, std::string_view source) {
    RobotConfig config = base;
    std::string section;
    std::set<std::string> seen;
    std::set<std::string_view> sections;
    for (const auto& f : schema()) sections.insert(f.section);

    auto fail = [&](std::size_t line_no, const std::string& what) {
        throw InputError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim_ws(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "malformed section header");
            section = std::string(trim_ws(line.substr(1, line.size() - 2)));
            if (!sections.contains(section)) fail(line_no, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const auto key = trim_ws(line.substr(0, eq));
        const auto value = trim_ws(line.substr(eq + 1));
        if (section.empty()) fail(line_no, "key '" + std::string(key) + "' outside any section");

        const Field* field = nullptr;
        for (const auto& f : schema()) {
            if (f.section == section && f.key == key) field = &f;
        }
        if (!field) fail(line_no, "unknown key '" + std::string(key) + "' in [" + section + "]");
        const std::string qualified = section + "." + std::string(key);
        if (!seen.insert(qualified).second) fail(line_no, "duplicate key '" + qualified + "'");

        double v = 0.0;
        const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
        if (res.ec != std::errc{} || res.ptr != value.data() + value.size() || !std::isfinite(v)) {
            fail(line_no, "'" + qualified + "' is not a number: '" + std::string(value) + "'");
        }
        if (field->integral && v != std::floor(v)) fail(line_no, "'" + qualified + "' must be an integer");
        field->ref(config) = v;
    }
    return config;
}

RobotConfig load_config(const std::string& path, const RobotConfig& base) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config '" + path + "'");
    return parse_config(in, base, path);
}

void write_config(std::ostream& out, const RobotConfig& config, std::span<const std::string_view> sections) {
    RobotConfig copy = config;
    std::string_view current;
    bool first = true;
    for (const auto& f : schema()) {
        if (!sections.empty() && std::find(sections.begin(), sections.end(), f.section) == sections.end()) continue;
        if (f.section != current) {
            if (!first) out << '\n';
            out << '[' << f.section << "]\n";
            current = f.section;
            first = false;
        }
        out << f.key << " = " << shortest(f.ref(copy)) << '\n';
    }
}

RobotModel to_robot(const RobotConfig& c) {
    RobotModel r;
    r.wing = WingGeometry{c.geometry.pitch_deg * kDeg, c.geometry.r_tip_mm * 1e-3, c.geometry.c1_mm * 1e-3,
                          c.geometry.c2_mm * 1e-3, c.geometry.c3_mm * 1e-3};
    r.propulsion.mount_radius = c.propulsion.r_m_mm * 1e-3;
    r.propulsion.propeller = PropellerParams{c.propulsion.prop_radius_mm * 1e-3, as_int(c.propulsion.blade_count),
                                             c.propulsion.a0, c.propulsion.a1, c.propulsion.a2, c.propulsion.kappa};
    r.propulsion.motor = MotorParams{c.propulsion.motor_resistance_ohm, c.propulsion.motor_k_mV_s_per_rad * 1e-3,
                                     c.propulsion.max_voltage_V};
    r.mass = MassModel{c.mass.rod_density_g_per_m * 1e-3, c.mass.wing_density_g_per_m2 * 1e-3,
                       c.mass.fixed_mass_g * 1e-3};
    r.aero = AeroCoefficients{c.aero.c_l1, c.aero.c_d0, c.aero.c_d1, c.aero.rho_kg_per_m3};
    r.environment = Environment{c.environment.gravity_m_per_s2, c.environment.free_stream_m_per_s};
    r.validate();
    return r;
}

SolverSettings to_settings(const RobotConfig& c) {
    SolverSettings s;
    s.wing.station_count = as_int(c.solver.station_count);
    s.wing.station.tolerance = c.solver.station_tolerance;
    s.wing.station.max_iterations = as_int(c.solver.station_max_iterations);
    s.wing.reference_omega = c.solver.reference_omega_rad_s;
    s.trim.tolerance = c.solver.trim_tolerance;
    s.trim.min_omega = c.solver.trim_min_omega_rad_s;
    s.trim.max_omega = c.solver.trim_max_omega_rad_s;
    if (s.wing.station_count < 16) throw InputError("solver.station_count must be at least 16");
    if (!(s.wing.station.tolerance > 0.0 && s.trim.tolerance > 0.0)) throw InputError("solver tolerances must be positive");
    if (s.wing.station.max_iterations < 1) throw InputError("solver.station_max_iterations must be positive");
    if (!(s.wing.reference_omega > 0.0)) throw InputError("solver.reference_omega_rad_s must be positive");
    if (!(s.trim.min_omega > 0.0 && s.trim.min_omega < s.trim.max_omega)) {
        throw InputError("solver needs 0 < trim_min_omega_rad_s < trim_max_omega_rad_s");
    }
    return s;
}

OptimizationContext to_context(const RobotConfig& c) {
    OptimizationContext ctx;
    ctx.base = to_robot(c);
    ctx.settings = to_settings(c);
    ctx.voltage = c.optimizer.voltage_V;
    ctx.penalty_weight = c.optimizer.penalty_weight_N;
    ctx.constraints.max_tip_radius = c.optimizer.r_tip_max_mm * 1e-3;
    if (!(ctx.voltage > 0.0 && ctx.voltage <= ctx.base.propulsion.motor.max_voltage)) {
        throw InputError("optimizer.voltage_V must lie in (0, max_voltage_V]");
    }
    if (!(ctx.penalty_weight > 0.0)) throw InputError("optimizer.penalty_weight_N must be positive");
    if (!(ctx.constraints.max_tip_radius > 0.0)) throw InputError("optimizer.r_tip_max_mm must be positive");
    return ctx;
}

OptimizerOptions to_optimizer_options(const RobotConfig& c) {
    OptimizerOptions o;
    if (!(c.optimizer.max_evaluations >= 7)) throw InputError("optimizer.max_evaluations must be at least 7");
    if (!(c.optimizer.spread_tolerance_N > 0.0)) throw InputError("optimizer.spread_tolerance_N must be positive");
    o.nelder_mead.max_evaluations = static_cast<std::size_t>(c.optimizer.max_evaluations);
    o.nelder_mead.spread_tolerance = c.optimizer.spread_tolerance_N;
    return o;
}

void set_design(RobotConfig& c, const DesignVector& d) {
    c.geometry.pitch_deg = d.beta / kDeg;
    c.geometry.r_tip_mm = d.r_tip * 1e3;
    c.geometry.c1_mm = d.c1 * 1e3;
    c.geometry.c2_mm = d.c2 * 1e3;
    c.geometry.c3_mm = d.c3 * 1e3;
    c.propulsion.r_m_mm = d.r_m * 1e3;
}

void set_aero(RobotConfig& c, const AeroCoefficients& a) {
    c.aero.c_l1 = a.c_l1;
    c.aero.c_d0 = a.c_d0;
    c.aero.c_d1 = a.c_d1;
    c.aero.rho_kg_per_m3 = a.rho;
}

std::map<std::string, WingGeometry> load_geometry_registry(const std::string& directory, const RobotConfig& base) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(directory, ec)) throw InputError("geometry registry '" + directory + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cfg") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::map<std::string, WingGeometry> out;
    for (const auto& f : files) {
        out.emplace(f.stem().string(), to_robot(load_config(f.string(), base)).wing);
    }
    return out;
}

}  // namespace samara::cli
