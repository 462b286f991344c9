#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "samara/aero_coefficients.hpp"
#include "samara/geometry.hpp"
#include "samara/nelder_mead.hpp"
#include "samara/wing_aero.hpp"

namespace samara {

struct MeasurementRecord {
    std::string robot_id;
    double omega_rev = 0.0;  // [rad/s]
    double thrust = 0.0;     // [N]

    friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

struct MeasurementSet {
    std::vector<MeasurementRecord> records;
    std::map<std::string, WingGeometry> geometries;

    /// Throws InputError naming the first robot id missing from `geometries`,
    /// DomainError for non-positive speeds or thrusts.
    void validate() const;
};

/// Reads `robot_id,omega_rad_s,thrust_mN` (header mandatory); thrust is converted to newtons.
std::vector<MeasurementRecord> read_measurements(std::istream& in);

/// Writes the same schema with 9 significant digits.
void write_measurements(std::ostream& out, const std::vector<MeasurementRecord>& records);

/// T_R = C_T,R(geometry, coefficients) Omega^2 using the measured Omega.
double predict_thrust_at_speed(const WingGeometry& geometry, const AeroCoefficients& coeffs, double omega_rev,
                               const WingSolverOptions& options = {});

struct RmsBreakdown {
    double total = 0.0;
    std::map<std::string, double> per_robot;
};

/// Absolute RMS thrust error [N]; one wing solve per geometry.
RmsBreakdown thrust_rms(const MeasurementSet& data, const AeroCoefficients& coeffs,
                        const WingSolverOptions& options = {});

struct FitOptions {
    NelderMeadOptions nelder_mead{1.0, 2.0, 0.5, 0.5, 1e-10, 1500};
    int max_restarts = 6;  // restart from the best point until RMS stops improving
    double relative_step = 0.1;
    double penalty_weight = 1e3;
    WingSolverOptions wing;
};

struct FitResult {
    AeroCoefficients coefficients;
    double rms_error = 0.0;     // [N]
    double initial_rms = 0.0;   // [N]
    std::map<std::string, double> per_robot_rms;
    std::size_t datapoints_used = 0;
    std::size_t evaluations = 0;
};

/// Refits c_l1, c_d0 and c_d1 (rho frozen) minimizing RMS thrust error.
/// Throws FitError for fewer than three records or data that cannot separate
/// the coefficients (one geometry at one speed).
FitResult fit(const MeasurementSet& data, const AeroCoefficients& initial, const FitOptions& options = {});

}  // namespace samara
