#include "samara/report.hpp"

#include <cstdio>
#include <numbers>
#include <ostream>

namespace samara {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kStandardGravity = 9.80665;

void row(std::ostream& out, const char* key, double value) {
    out << key << ' ' << format_number(value) << '\n';
}

}  // namespace

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value == 0.0 ? 0.0 : value);
    return buf;
}

void write_trim_report(std::ostream& out, const TrimState& t) {
    row(out, "voltage_V", t.voltage);
    row(out, "omega_rad_s", t.omega_rev);
    row(out, "omega_rev_s", t.omega_rev / (2.0 * std::numbers::pi));
    row(out, "thrust_N", t.thrust);
    row(out, "thrust_mN", t.thrust * 1e3);
    row(out, "thrust_gf", t.thrust / kStandardGravity * 1e3);
    row(out, "torque_Nm", t.torque);
    row(out, "prop_thrust_N", t.propeller.thrust);
    row(out, "prop_omega_rad_s", t.propeller.omega_prop);
    row(out, "prop_induced_velocity_m_s", t.propeller.v_i);
    row(out, "prop_axial_inflow_m_s", t.propeller.axial_inflow);
    row(out, "robot_mass_g", t.robot_mass * 1e3);
    row(out, "payload_margin_N", t.payload_margin);
    row(out, "torque_residual", t.torque_residual);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& sweep) {
    out << "U_V,omega_rad_s,omega_sq,thrust_mN,torque_Nmm\n";
    for (const auto& p : sweep) {
        if (!p.trim) continue;
        const auto& t = *p.trim;
        out << format_number(p.voltage) << ',' << format_number(t.omega_rev) << ','
            << format_number(t.omega_rev * t.omega_rev) << ',' << format_number(t.thrust * 1e3) << ','
            << format_number(t.torque * 1e3) << '\n';
    }
}

void write_planform_csv(std::ostream& out, const WingGeometry& geometry, int points) {
    out << "r_m,chord_m,leading_edge_y_m,trailing_edge_y_m\n";
    for (const auto& p : planform_outline(geometry, points)) {
        out << format_number(p.r) << ',' << format_number(p.chord) << ',' << format_number(p.leading_edge_y) << ','
            << format_number(p.trailing_edge_y) << '\n';
    }
}

void write_spanwise_csv(std::ostream& out, const WingAeroResult& wing) {
    out << "r_m,v_a_m_s,v_theta_m_s,alpha_deg,dT_dr_N_per_m,dQ_dr_N\n";
    for (const auto& s : wing.stations) {
        out << format_number(s.r) << ',' << format_number(s.v_a) << ',' << format_number(s.v_theta) << ','
            << format_number(s.alpha * kRadToDeg) << ',' << format_number(s.dT_dr) << ',' << format_number(s.dQ_dr)
            << '\n';
    }
}

void write_prop_curve_csv(std::ostream& out, const std::vector<PropCurvePoint>& curve) {
    out << "axial_inflow_m_s,thrust_N,omega_rad_s,thrust_const_omega_N\n";
    for (const auto& p : curve) {
        out << format_number(p.axial_inflow) << ',' << format_number(p.thrust) << ',' << format_number(p.omega_prop)
            << ',' << format_number(p.thrust_const_omega) << '\n';
    }
}

void write_history_csv(std::ostream& out, const std::vector<HistoryEntry>& history) {
    out << "iteration,best_objective_N\n";
    for (const auto& h : history) out << h.iteration << ',' << format_number(h.best_objective) << '\n';
}

}  // namespace samara
