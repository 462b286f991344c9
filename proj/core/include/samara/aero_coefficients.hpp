#pragma once

// Quasi-steady flat-plate lift/drag model shared by the wing solver and
// the calibration. All quantities SI.

namespace samara {

struct AeroCoefficients {
    double c_l1 = 1.72;  // lift amplitude
    double c_d0 = 0.11;  // parasitic drag
    double c_d1 = 1.94;  // drag amplitude
    double rho = 1.2;    // air density [kg/m^3]

    /// Throws DomainError unless rho > 0, c_l1 > 0, c_d0 >= 0, c_d1 >= 0.
    void validate() const;

    friend bool operator==(const AeroCoefficients&, const AeroCoefficients&) = default;
};

/// C_l(alpha) = c_l1 sin(2 alpha).
double lift_coefficient(double alpha, const AeroCoefficients& coeffs) noexcept;

/// C_d(alpha) = c_d0 + c_d1 (1 - cos(2 alpha)).
double drag_coefficient(double alpha, const AeroCoefficients& coeffs) noexcept;

}  // namespace samara
