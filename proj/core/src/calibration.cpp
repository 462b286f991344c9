#include "samara/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "samara/error.hpp"
#include "samara/report.hpp"

namespace samara {
namespace {

std::string trim_ws(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim_ws(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_number(const std::string& text, std::size_t line_no) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
        throw InputError("measurements line " + std::to_string(line_no) + ": not a number: '" + text + "'");
    }
    return v;
}

// Canonical record order so the fit does not depend on file order.
std::vector<MeasurementRecord> canonical(std::vector<MeasurementRecord> records) {
    std::sort(records.begin(), records.end(), [](const MeasurementRecord& a, const MeasurementRecord& b) {
        if (a.robot_id != b.robot_id) return a.robot_id < b.robot_id;
        if (a.omega_rev != b.omega_rev) return a.omega_rev < b.omega_rev;
        return a.thrust < b.thrust;
    });
    return records;
}

}  // namespace

void MeasurementSet::validate() const {
    for (const auto& r : records) {
        if (!geometries.contains(r.robot_id)) throw InputError("no geometry registered for robot_id '" + r.robot_id + "'");
        if (!(r.omega_rev > 0.0)) throw DomainError("measurement for '" + r.robot_id + "' has non-positive speed");
        if (!(r.thrust > 0.0)) throw DomainError("measurement for '" + r.robot_id + "' has non-positive thrust");
    }
    for (const auto& [id, g] : geometries) g.validate();
}

std::vector<MeasurementRecord> read_measurements(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    std::vector<MeasurementRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim_ws(line).empty()) continue;
        const auto fields = split_csv(trim_ws(line));
        if (!header) {
            if (fields != std::vector<std::string>{"robot_id", "omega_rad_s", "thrust_mN"}) {
                throw InputError("measurements: header must be 'robot_id,omega_rad_s,thrust_mN'");
            }
            header = true;
            continue;
        }
        if (fields.size() != 3) {
            throw InputError("measurements line " + std::to_string(line_no) + ": expected 3 fields");
        }
        if (fields[0].empty()) throw InputError("measurements line " + std::to_string(line_no) + ": empty robot_id");
        out.push_back({fields[0], parse_number(fields[1], line_no), parse_number(fields[2], line_no) * 1e-3});
    }
    if (!header) throw InputError("measurements: missing header");
    return out;
}

void write_measurements(std::ostream& out, const std::vector<MeasurementRecord>& records) {
    out << "robot_id,omega_rad_s,thrust_mN\n";
    for (const auto& r : records) {
        out << r.robot_id << ',' << format_number(r.omega_rev) << ',' << format_number(r.thrust * 1e3) << '\n';
    }
}

double predict_thrust_at_speed(const WingGeometry& geometry, const AeroCoefficients& coeffs, double omega_rev,
                               const WingSolverOptions& options) {
    if (!(omega_rev > 0.0)) throw DomainError("revolving rate must be positive");
    return wing_coefficients(geometry, coeffs, options).thrust_at(omega_rev);
}

RmsBreakdown thrust_rms(const MeasurementSet& data, const AeroCoefficients& coeffs, const WingSolverOptions& options) {
    std::map<std::string, double> ct;
    for (const auto& [id, g] : data.geometries) {
        ct.emplace(id, wing_coefficients(g, coeffs, options).thrust_coefficient);
    }
    RmsBreakdown out;
    std::map<std::string, std::pair<double, std::size_t>> sums;
    double total = 0.0;
    const auto records = canonical(data.records);
    for (const auto& r : records) {
        const double err = ct.at(r.robot_id) * r.omega_rev * r.omega_rev - r.thrust;
        total += err * err;
        auto& s = sums[r.robot_id];
        s.first += err * err;
        ++s.second;
    }
    out.total = records.empty() ? 0.0 : std::sqrt(total / static_cast<double>(records.size()));
    for (const auto& [id, s] : sums) out.per_robot[id] = std::sqrt(s.first / static_cast<double>(s.second));
    return out;
}

FitResult fit(const MeasurementSet& input, const AeroCoefficients& initial, const FitOptions& options) {
    input.validate();
    initial.validate();
    if (input.records.size() < 3) throw FitError("fit needs at least three datapoints");

    MeasurementSet data;
    data.records = canonical(input.records);
    for (const auto& r : data.records) data.geometries.emplace(r.robot_id, input.geometries.at(r.robot_id));
    const bool one_geometry = data.geometries.size() == 1;
    const bool one_speed = std::all_of(data.records.begin(), data.records.end(), [&](const MeasurementRecord& r) {
        return r.omega_rev == data.records.front().omega_rev;
    });
    if (one_geometry && one_speed) throw FitError("ill-posed fit: every datapoint shares one geometry and one speed");

    FitResult result;
    auto to_coeffs = [&](std::span<const double> p) {
        AeroCoefficients c = initial;
        c.c_l1 = std::max(p[0], 1e-9);
        c.c_d0 = std::max(p[1], 0.0);
        c.c_d1 = std::max(p[2], 0.0);
        return c;
    };
    const ObjectiveFn f = [&](std::span<const double> p) {
        const double violation = std::max(1e-9 - p[0], 0.0) + std::max(-p[1], 0.0) + std::max(-p[2], 0.0);
        return thrust_rms(data, to_coeffs(p), options.wing).total + options.penalty_weight * violation;
    };

    std::vector<double> best{initial.c_l1, initial.c_d0, initial.c_d1};
    result.initial_rms = f(best);
    double best_value = result.initial_rms;
    const std::vector<double> min_step{1e-3, 1e-3, 1e-3};
    for (int run = 0; run <= options.max_restarts; ++run) {
        const auto nm = nelder_mead(f, initial_simplex(best, min_step, options.relative_step), options.nelder_mead);
        result.evaluations += nm.evaluations;
        const double gain = best_value - nm.value;
        if (nm.value < best_value) {
            best = nm.best;
            best_value = nm.value;
        }
        if (gain <= options.nelder_mead.spread_tolerance) break;
    }

    result.coefficients = to_coeffs(best);
    const auto rms = thrust_rms(data, result.coefficients, options.wing);
    result.rms_error = rms.total;
    result.per_robot_rms = rms.per_robot;
    result.datapoints_used = data.records.size();
    return result;
}

}  // namespace samara
