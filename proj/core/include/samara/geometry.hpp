#pragma once

#include <array>
#include <vector>

#include "samara/spline.hpp"

namespace samara {

/// Planform of one flat airfoil; the robot carries kAirfoilCount identical copies.
///
/// The chord is a natural cubic spline through four knots spaced uniformly
/// from the root (kRootFraction * tip_radius) to the tip:
/// (root, c1), (root + L/3, c2), (root + 2L/3, c3), (tip, 0).
struct WingGeometry {
    static constexpr double kRootFraction = 0.15;
    static constexpr int kAirfoilCount = 2;

    double pitch = 0.0;       // beta [rad]
    double tip_radius = 0.0;  // R_tip [m]
    double c1 = 0.0;          // chord at the root [m]
    double c2 = 0.0;          // [m]
    double c3 = 0.0;          // [m]

    double root_radius() const noexcept { return kRootFraction * tip_radius; }
    double span() const noexcept { return tip_radius - root_radius(); }
    std::array<double, 4> knot_radii() const noexcept;

    /// Throws DomainError unless 0 < pitch < pi/2, tip_radius > 0, chords >= 0.
    void validate() const;

    friend bool operator==(const WingGeometry&, const WingGeometry&) = default;
};

/// Evaluator for c(r); build once and reuse inside station loops.
class ChordProfile {
public:
    explicit ChordProfile(const WingGeometry& geometry);

    /// Chord at r, clamped at zero. Throws DomainError outside [root, tip].
    double operator()(double r) const;

    /// Unclamped spline value (may dip below zero).
    double raw(double r) const noexcept { return spline_(r); }
    double raw_derivative(double r) const noexcept { return spline_.derivative(r); }

    /// Most negative excursion of the unclamped spline, or 0 if it never dips.
    double negative_excursion() const noexcept;

    double root() const noexcept { return root_; }
    double tip() const noexcept { return tip_; }

private:
    double root_;
    double tip_;
    NaturalCubicSpline spline_;
};

double chord_at(const WingGeometry& geometry, double r);

/// Planform area of one wing [m^2].
double wing_area(const WingGeometry& geometry, int panels_per_segment = 32);

struct MassModel {
    double rod_linear_density = 4.7e-3;   // [kg/m]
    double wing_areal_density = 92.6e-3;  // [kg/m^2]
    double fixed_mass = 0.0;              // motors, propellers, electronics, battery [kg]

    void validate() const;
    friend bool operator==(const MassModel&, const MassModel&) = default;
};

/// Airframe rod (motor to motor, 2 * mount_radius) plus both wings.
double structural_mass(const WingGeometry& geometry, const MassModel& mass, double mount_radius);

/// structural_mass + fixed_mass [kg].
double robot_mass(const WingGeometry& geometry, const MassModel& mass, double mount_radius);

struct PlanformPoint {
    double r;
    double chord;
    double leading_edge_y;
    double trailing_edge_y;
};

/// Outline samples with a straight leading edge at y = 0.
std::vector<PlanformPoint> planform_outline(const WingGeometry& geometry, int points = 101);

}  // namespace samara
