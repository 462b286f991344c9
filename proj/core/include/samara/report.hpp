#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "samara/equilibrium.hpp"
#include "samara/geometry.hpp"
#include "samara/optimizer.hpp"
#include "samara/wing_aero.hpp"

// Text and CSV emitters. Every CSV has a header row, comma separators, LF
// line endings and numbers printed with 9 significant digits.

namespace samara {

std::string format_number(double value);

void write_trim_report(std::ostream& out, const TrimState& trim);

/// U_V,omega_rad_s,omega_sq,thrust_mN,torque_Nmm (failed points are skipped).
void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& sweep);

/// r_m,chord_m,leading_edge_y_m,trailing_edge_y_m
void write_planform_csv(std::ostream& out, const WingGeometry& geometry, int points = 101);

/// r_m,v_a_m_s,v_theta_m_s,alpha_deg,dT_dr_N_per_m,dQ_dr_N
void write_spanwise_csv(std::ostream& out, const WingAeroResult& wing);

struct PropCurvePoint {
    double axial_inflow;        // [m/s]
    double thrust;              // coupled motor/propeller [N]
    double omega_prop;          // [rad/s]
    double thrust_const_omega;  // spin rate frozen at its static value [N]
};

/// axial_inflow_m_s,thrust_N,omega_rad_s,thrust_const_omega_N
void write_prop_curve_csv(std::ostream& out, const std::vector<PropCurvePoint>& curve);

/// iteration,best_objective_N
void write_history_csv(std::ostream& out, const std::vector<HistoryEntry>& history);

}  // namespace samara
