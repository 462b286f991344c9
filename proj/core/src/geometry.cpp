#include "samara/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "samara/error.hpp"

namespace samara {
namespace {

constexpr double kSpanSlack = 1e-12;

NaturalCubicSpline make_spline(const WingGeometry& g) {
    const auto x = g.knot_radii();
    const std::array<double, 4> y{g.c1, g.c2, g.c3, 0.0};
    return NaturalCubicSpline(x, y);
}

}  // namespace

std::array<double, 4> WingGeometry::knot_radii() const noexcept {
    const double root = root_radius();
    const double step = (tip_radius - root) / 3.0;
    return {root, root + step, root + 2.0 * step, tip_radius};
}

void WingGeometry::validate() const {
    if (!(pitch > 0.0 && pitch < std::numbers::pi / 2.0)) throw DomainError("wing pitch must lie in (0, pi/2)");
    if (!(tip_radius > 0.0)) throw DomainError("tip radius must be positive");
    if (!(c1 >= 0.0 && c2 >= 0.0 && c3 >= 0.0)) throw DomainError("control chords must be non-negative");
}

ChordProfile::ChordProfile(const WingGeometry& geometry)
    : root_(geometry.root_radius()), tip_(geometry.tip_radius), spline_(make_spline(geometry)) {}

double ChordProfile::operator()(double r) const {
    const double slack = kSpanSlack * tip_;
    if (r < root_ - slack || r > tip_ + slack) throw DomainError("radius outside the wing span");
    if (r >= tip_) return 0.0;
    return std::max(0.0, spline_(r));
}

double ChordProfile::negative_excursion() const noexcept { return std::min(0.0, spline_.minimum()); }

double chord_at(const WingGeometry& geometry, double r) { return ChordProfile(geometry)(r); }

double wing_area(const WingGeometry& geometry, int panels_per_segment) {
    // 5-point Gauss-Legendre per panel; exact for the cubic pieces away from
    // the points where clamping kicks in.
    static constexpr std::array<double, 5> node{-0.9061798459386640, -0.5384693101056831, 0.0,
                                                0.5384693101056831, 0.9061798459386640};
    static constexpr std::array<double, 5> weight{0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                                  0.4786286704993665, 0.2369268850561891};
    const ChordProfile chord(geometry);
    const auto knots = geometry.knot_radii();
    double area = 0.0;
    for (std::size_t s = 0; s + 1 < knots.size(); ++s) {
        const double h = (knots[s + 1] - knots[s]) / panels_per_segment;
        for (int p = 0; p < panels_per_segment; ++p) {
            const double mid = knots[s] + (p + 0.5) * h;
            for (std::size_t q = 0; q < node.size(); ++q) {
                area += 0.5 * h * weight[q] * std::max(0.0, chord.raw(mid + 0.5 * h * node[q]));
            }
        }
    }
    return area;
}

void MassModel::validate() const {
    if (!(rod_linear_density >= 0.0 && wing_areal_density >= 0.0 && fixed_mass >= 0.0)) {
        throw DomainError("mass model densities and fixed mass must be non-negative");
    }
}

double structural_mass(const WingGeometry& geometry, const MassModel& mass, double mount_radius) {
    return mass.rod_linear_density * (2.0 * mount_radius) +
           mass.wing_areal_density * (WingGeometry::kAirfoilCount * wing_area(geometry));
}

double robot_mass(const WingGeometry& geometry, const MassModel& mass, double mount_radius) {
    return mass.fixed_mass + structural_mass(geometry, mass, mount_radius);
}

std::vector<PlanformPoint> planform_outline(const WingGeometry& geometry, int points) {
    if (points < 2) throw DomainError("planform outline needs at least two points");
    const ChordProfile chord(geometry);
    std::vector<PlanformPoint> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double r = (i == points - 1) ? geometry.tip_radius
                                           : geometry.root_radius() + geometry.span() * i / (points - 1);
        const double c = chord(r);
        out.push_back({r, c, 0.0, -c});
    }
    return out;
}

}  // namespace samara
