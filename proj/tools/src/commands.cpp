#include "samara/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "samara/calibration.hpp"
#include "samara/cli/config.hpp"
#include "samara/equilibrium.hpp"
#include "samara/error.hpp"
#include "samara/profile.hpp"
#include "samara/propulsion.hpp"
#include "samara/report.hpp"

namespace samara::cli {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// No feasible design to report (exit code 4).
struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonArgs {
    std::string config_path;
    std::string profile{kCrazyflieBench};
};

RobotConfig load(const CommonArgs& a) {
    RobotConfig base = profile_config(a.profile);
    return a.config_path.empty() ? base : load_config(a.config_path, base);
}

// Writes to `path`, or to `fallback` when path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
    if (path.empty() || path == "-") {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "' for writing");
    write(file);
    if (!file) throw InputError("failed writing '" + path + "'");
}

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("config", a.config_path, "Robot config file layered on the profile");
    cmd->add_option("--profile", a.profile, "Built-in parameter profile")->capture_default_str();
}

int cmd_predict(const CommonArgs& a, double voltage, const std::string& out_path, const std::string& spanwise_path,
                std::ostream& out) {
    const auto config = load(a);
    const auto robot = to_robot(config);
    const auto settings = to_settings(config);
    if (voltage <= 0.0) voltage = robot.propulsion.motor.max_voltage;

    const auto wing = wing_coefficients(robot.wing, robot.aero, settings.wing);
    const auto trim = solve_trim(voltage, robot, wing, settings.trim);
    emit(out_path, out, [&](std::ostream& os) {
        write_trim_report(os, trim);
        os << "fixed_mass_g " << format_number(robot.mass.fixed_mass * 1e3) << '\n';
        os << "thrust_coefficient_N_s2 " << format_number(wing.thrust_coefficient) << '\n';
        os << "torque_coefficient_N_m_s2 " << format_number(wing.torque_coefficient) << '\n';
    });
    if (!spanwise_path.empty()) {
        const auto at_trim = solve_wing(robot.wing, robot.aero, trim.omega_rev, settings.wing);
        emit(spanwise_path, out, [&](std::ostream& os) { write_spanwise_csv(os, at_trim); });
    }
    return kOk;
}

int cmd_sweep(const CommonArgs& a, double v_min, double v_max, int steps, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    const auto config = load(a);
    const auto robot = to_robot(config);
    const auto sweep = voltage_sweep(v_min, v_max, steps, robot, to_settings(config));
    int failures = 0;
    for (const auto& p : sweep) {
        if (!p.trim) {
            err << "U=" << format_number(p.voltage) << " V: " << p.error << '\n';
            ++failures;
        }
    }
    emit(out_path, out, [&](std::ostream& os) { write_sweep_csv(os, sweep); });
    return failures == 0 ? kOk : kModelError;
}

int cmd_prop_curve(const CommonArgs& a, double voltage, double inflow_max, int points, const std::string& out_path,
                   std::ostream& out) {
    if (points < 2) throw InputError("--points must be at least 2");
    if (!(inflow_max > 0.0)) throw InputError("--inflow-max must be positive");
    const auto robot = to_robot(load(a));
    const auto& prop = robot.propulsion.propeller;
    const auto& motor = robot.propulsion.motor;
    const double rho = robot.aero.rho;
    if (voltage <= 0.0) voltage = motor.max_voltage;

    const double static_omega = solve_operating_point(voltage, 0.0, prop, motor, rho).omega_prop;
    std::vector<PropCurvePoint> curve;
    for (int i = 0; i < points; ++i) {
        const double u = i == points - 1 ? inflow_max : inflow_max * i / (points - 1);
        const auto coupled = solve_operating_point(voltage, u, prop, motor, rho);
        const auto frozen = propeller_at_speed(static_omega, u, prop, rho);
        curve.push_back({u, coupled.thrust, coupled.omega_prop, frozen.thrust});
    }
    emit(out_path, out, [&](std::ostream& os) { write_prop_curve_csv(os, curve); });
    return kOk;
}

int cmd_optimize(const CommonArgs& a, const std::string& seed_kind, const std::string& out_path,
                 const std::string& history_path, const std::string& planform_path, std::ostream& out) {
    auto config = load(a);
    const auto ctx = to_context(config);
    const auto options = to_optimizer_options(config);

    DesignVector seed;
    if (seed_kind == "rectangular") {
        seed = rectangular_seed();
    } else if (seed_kind == "config") {
        seed = DesignVector::from_robot(ctx.base);
    } else {
        throw InputError("--seed must be 'rectangular' or 'config'");
    }

    OptimizationReport report;
    try {
        report = optimize(seed, ctx, options);
    } catch (const DomainError& e) {
        std::ostringstream msg;
        msg << "infeasible optimization: " << e.what();
        throw Infeasible(msg.str());
    }

    // Report the design exactly as it will be read back from the written config.
    set_design(config, report.best);
    const auto written = to_robot(config);
    const auto design = DesignVector::from_robot(written);
    const auto eval = evaluate_design(design, ctx);
    if (!eval.feasible) throw Infeasible("infeasible optimization: written design violates a constraint");

    emit(out_path, out, [&](std::ostream& os) {
        os << "# optimized from the " << seed_kind << " seed\n";
        write_config(os, config);
    });
    if (!history_path.empty()) emit(history_path, out, [&](std::ostream& os) { write_history_csv(os, report.history); });
    if (!planform_path.empty()) {
        emit(planform_path, out, [&](std::ostream& os) { write_planform_csv(os, written.wing); });
    }

    out << "termination " << to_string(report.termination) << '\n';
    out << "iterations " << report.iterations << '\n';
    out << "evaluations " << report.evaluations << '\n';
    out << "objective_N " << format_number(eval.value) << '\n';
    out << "thrust_N " << format_number(eval.thrust) << '\n';
    out << "pitch_deg " << format_number(design.beta / kDeg) << '\n';
    out << "r_m_mm " << format_number(design.r_m * 1e3) << '\n';
    out << "r_tip_mm " << format_number(design.r_tip * 1e3) << '\n';
    out << "c1_mm " << format_number(design.c1 * 1e3) << '\n';
    out << "c2_mm " << format_number(design.c2 * 1e3) << '\n';
    out << "c3_mm " << format_number(design.c3 * 1e3) << '\n';
    return kOk;
}

int cmd_fit(const CommonArgs& a, const std::string& measurements_path, const std::string& geometry_dir,
            const std::string& out_path, std::ostream& out) {
    auto config = load(a);
    const auto robot = to_robot(config);
    const auto settings = to_settings(config);

    MeasurementSet data;
    {
        std::ifstream in(measurements_path);
        if (!in) throw InputError("cannot open measurements '" + measurements_path + "'");
        data.records = read_measurements(in);
    }
    data.geometries = load_geometry_registry(geometry_dir, config);
    data.validate();

    FitOptions options;
    options.wing = settings.wing;
    const auto result = fit(data, robot.aero, options);

    set_aero(config, result.coefficients);
    const std::string_view aero_only[] = {"aero"};
    emit(out_path, out, [&](std::ostream& os) {
        os << "# refit from " << result.datapoints_used << " datapoints\n";
        write_config(os, config, aero_only);
    });

    out << "datapoints " << result.datapoints_used << '\n';
    out << "c_l1 " << format_number(result.coefficients.c_l1) << '\n';
    out << "c_d0 " << format_number(result.coefficients.c_d0) << '\n';
    out << "c_d1 " << format_number(result.coefficients.c_d1) << '\n';
    out << "initial_rms_mN " << format_number(result.initial_rms * 1e3) << '\n';
    out << "rms_mN " << format_number(result.rms_error * 1e3) << '\n';
    out << "robot_id,rms_mN\n";
    for (const auto& [id, rms] : result.per_robot_rms) out << id << ',' << format_number(rms * 1e3) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Design and analysis of revolving-wing hovering robots", "samara"};
    app.require_subcommand(1);

    CommonArgs common;
    double voltage = 0.0;
    std::string out_path;

    auto* predict = app.add_subcommand("predict", "Hover trim at a drive voltage");
    add_common(predict, common);
    std::string spanwise_path;
    predict->add_option("--voltage", voltage, "Drive voltage [V] (default: max voltage)");
    predict->add_option("--out", out_path, "Report file (default: stdout)");
    predict->add_option("--spanwise", spanwise_path, "Spanwise diagnostics CSV at the trim speed");

    auto* sweep = app.add_subcommand("sweep", "Trim over a range of voltages");
    add_common(sweep, common);
    double v_min = 0.0;
    double v_max = 0.0;
    int steps = 7;
    sweep->add_option("--v-min", v_min, "Lowest voltage [V]")->required();
    sweep->add_option("--v-max", v_max, "Highest voltage [V]")->required();
    sweep->add_option("--steps", steps, "Number of voltages")->capture_default_str();
    sweep->add_option("--out", out_path, "CSV file (default: stdout)");

    auto* prop_curve = app.add_subcommand("prop-curve", "Propeller thrust and speed against axial inflow");
    add_common(prop_curve, common);
    double inflow_max = 10.0;
    int points = 41;
    prop_curve->add_option("--voltage", voltage, "Drive voltage [V] (default: max voltage)");
    prop_curve->add_option("--inflow-max", inflow_max, "Largest axial inflow [m/s]")->capture_default_str();
    prop_curve->add_option("--points", points, "Rows in the curve")->capture_default_str();
    prop_curve->add_option("--out", out_path, "CSV file (default: stdout)");

    auto* optimize_cmd = app.add_subcommand("optimize", "Maximize payload over the wing design");
    add_common(optimize_cmd, common);
    std::string seed_kind = "rectangular";
    std::string history_path;
    std::string planform_path;
    optimize_cmd->add_option("--seed", seed_kind, "Starting design: rectangular or config")->capture_default_str();
    optimize_cmd->add_option("--out", out_path, "Optimized config file")->required();
    optimize_cmd->add_option("--history", history_path, "Convergence history CSV");
    optimize_cmd->add_option("--planform", planform_path, "Planform outline CSV");

    auto* fit_cmd = app.add_subcommand("fit", "Refit wing lift/drag coefficients to bench data");
    add_common(fit_cmd, common);
    std::string measurements_path;
    std::string geometry_dir;
    fit_cmd->add_option("--measurements", measurements_path, "CSV robot_id,omega_rad_s,thrust_mN")->required();
    fit_cmd->add_option("--geometries", geometry_dir, "Directory of <robot_id>.cfg files")->required();
    fit_cmd->add_option("--out", out_path, "Coefficients config file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "samara: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*predict) return cmd_predict(common, voltage, out_path, spanwise_path, out);
        if (*sweep) return cmd_sweep(common, v_min, v_max, steps, out_path, out, err);
        if (*prop_curve) return cmd_prop_curve(common, voltage, inflow_max, points, out_path, out);
        if (*optimize_cmd) return cmd_optimize(common, seed_kind, out_path, history_path, planform_path, out);
        if (*fit_cmd) return cmd_fit(common, measurements_path, geometry_dir, out_path, out);
    } catch (const InputError& e) {
        err << "samara: input error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "samara: input error: " << e.what() << '\n';
        return kInputError;
    } catch (const SolverError& e) {
        err << "samara: " << e.what() << '\n';
        return kModelError;
    } catch (const FitError& e) {
        err << "samara: " << e.what() << '\n';
        return kModelError;
    } catch (const Infeasible& e) {
        err << "samara: " << e.what() << '\n';
        return kInfeasible;
    } catch (const Error& e) {
        err << "samara: " << e.what() << '\n';
        return kModelError;
    }
    return kInputError;
}

}  // namespace samara::cli
