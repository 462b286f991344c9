#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "samara/error.hpp"
#include "samara/geometry.hpp"
#include "samara/profile.hpp"
#include "samara/spline.hpp"

using namespace samara;
using doctest::Approx;

namespace {

WingGeometry wing(double c1, double c2, double c3, double tip = 0.2) {
    return {0.48, tip, c1, c2, c3};
}

}  // namespace

TEST_CASE("spline interpolates knots with natural ends") {
    const std::vector<double> x{0.0, 0.5, 1.5, 2.0, 3.0};
    const std::vector<double> y{1.0, -2.0, 0.5, 4.0, 1.0};
    NaturalCubicSpline s(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(s(x[i]) == Approx(y[i]).epsilon(1e-12));

    // zero second derivative at both ends
    const double h = 1e-4;
    CHECK(std::abs((s.derivative(x.front() + h) - s.derivative(x.front())) / h) < 1e-2);
    CHECK(std::abs((s.derivative(x.back()) - s.derivative(x.back() - h)) / h) < 1e-2);

    // analytic minimum against dense sampling
    double sampled = s(x.front());
    for (int i = 0; i <= 300000; ++i) sampled = std::min(sampled, s(3.0 * i / 300000));
    CHECK(s.minimum() <= sampled + 1e-12);
    CHECK(s.minimum() == Approx(sampled).epsilon(1e-8));

    const std::vector<double> bad{0.0, 0.0, 1.0};
    const std::vector<double> ys{0.0, 1.0, 2.0};
    CHECK_THROWS_AS(NaturalCubicSpline(bad, ys), DomainError);
}

TEST_CASE("chord at knots and tip") {
    const auto g = wing(0.03, 0.05, 0.04);
    const auto r = g.knot_radii();
    CHECK(chord_at(g, g.tip_radius) == 0.0);
    CHECK(chord_at(g, g.root_radius()) == Approx(0.03).epsilon(1e-12));
    CHECK(chord_at(g, r[1]) == Approx(0.05).epsilon(1e-12));
    CHECK(chord_at(g, r[2]) == Approx(0.04).epsilon(1e-12));
    CHECK(r[0] == Approx(0.15 * 0.2));
    CHECK(r[1] - r[0] == Approx((0.2 - 0.03) / 3.0));

    const auto flat = wing(0.04, 0.04, 0.04);
    for (double k : {flat.knot_radii()[0], flat.knot_radii()[1], flat.knot_radii()[2]}) {
        CHECK(chord_at(flat, k) == Approx(0.04).epsilon(1e-12));
    }
}

TEST_CASE("chord outside the span is a domain error") {
    const auto g = wing(0.03, 0.05, 0.04);
    CHECK_THROWS_AS(chord_at(g, 0.0), DomainError);
    CHECK_THROWS_AS(chord_at(g, g.root_radius() * 0.99), DomainError);
    CHECK_THROWS_AS(chord_at(g, g.tip_radius * 1.01), DomainError);
}

TEST_CASE("chord matches the independent spline and clamps at zero") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 0.1);
    for (int k = 0; k < 50; ++k) {
        const auto g = wing(u(rng), u(rng), u(rng), 0.1 + u(rng));
        for (int i = 0; i <= 200; ++i) {
            const double r = g.root_radius() + g.span() * i / 200.0;
            const double expected = oracle::chord(r, g.tip_radius, g.c1, g.c2, g.c3);
            CHECK(chord_at(g, r) == Approx(expected).epsilon(1e-12).scale(1e-3));
            CHECK(chord_at(g, r) >= 0.0);
        }
    }
}

TEST_CASE("chord is C1 across interior knots") {
    const auto g = wing(0.02, 0.09, 0.03);
    const ChordProfile c(g);
    const double h = 1e-5;
    for (double k : {g.knot_radii()[1], g.knot_radii()[2]}) {
        // second-order one-sided slopes, each using only one segment
        const double left = (3.0 * c.raw(k) - 4.0 * c.raw(k - h) + c.raw(k - 2.0 * h)) / (2.0 * h);
        const double right = (-3.0 * c.raw(k) + 4.0 * c.raw(k + h) - c.raw(k + 2.0 * h)) / (2.0 * h);
        CHECK(std::abs(c.raw(k + 1e-12) - c.raw(k - 1e-12)) < 1e-9);
        CHECK(left == Approx(right).epsilon(1e-6).scale(1.0));
        CHECK(c.raw_derivative(k) == Approx(oracle::central_difference([&](double r) { return c.raw(r); }, k, 1e-6))
                                         .epsilon(1e-6));
    }
}

TEST_CASE("negative excursion") {
    CHECK(ChordProfile(wing(0.04, 0.04, 0.04)).negative_excursion() == 0.0);
    const ChordProfile dip(wing(0.05, 0.0, 0.0));
    CHECK(dip.negative_excursion() < 0.0);
}

TEST_CASE("wing area") {
    CHECK(wing_area(wing(0.0, 0.0, 0.0)) == 0.0);

    const auto g = wing(0.04, 0.04, 0.04);
    const double oracle_area = oracle::wing_area_trapezoid(g.tip_radius, g.c1, g.c2, g.c3);
    CHECK(std::abs(wing_area(g) / oracle_area - 1.0) < 1e-3);

    const auto ref = reference_design().wing();
    CHECK(std::abs(wing_area(ref) / oracle::wing_area_trapezoid(ref.tip_radius, ref.c1, ref.c2, ref.c3) - 1.0) <
          1e-3);

    const auto doubled = wing(0.08, 0.08, 0.08);
    CHECK(wing_area(doubled) == Approx(2.0 * wing_area(g)).epsilon(1e-9));

    for (const auto& w : {g, ref, wing(0.05, 0.0, 0.02)}) {
        CHECK(std::abs(wing_area(w, 64) / wing_area(w, 32) - 1.0) < 1e-3);
    }
}

TEST_CASE("wing area is nondecreasing in each control chord") {
    for (int which = 0; which < 3; ++which) {
        double prev = -1.0;
        for (int i = 0; i <= 40; ++i) {
            double c[3] = {0.03, 0.03, 0.03};
            c[which] = 0.1 * i / 40.0;
            const double a = wing_area(wing(c[0], c[1], c[2]));
            CHECK(a >= prev - 1e-15);
            prev = a;
        }
    }
}

TEST_CASE("mass model") {
    const auto g = wing(0.04, 0.04, 0.04);
    MassModel none{0.0, 0.0, 0.0138};
    CHECK(robot_mass(g, none, 0.2) == 0.0138);

    const MassModel m{4.7e-3, 92.6e-3, 0.005};
    const double rod = 4.7e-3 * 2.0 * 0.2;
    const double wings = 92.6e-3 * 2.0 * wing_area(g);
    CHECK(robot_mass(g, m, 0.2) == Approx(0.005 + rod + wings).epsilon(1e-14));

    MassModel heavier = m;
    heavier.wing_areal_density *= 2.0;
    CHECK(structural_mass(g, heavier, 0.2) - rod == Approx(2.0 * wings).epsilon(1e-12));

    const auto bench = crazyflie_bench();
    const double total = robot_mass(bench.wing, bench.mass, bench.propulsion.mount_radius);
    CHECK(total == Approx(0.0138).epsilon(1e-12));
    CHECK(total * 9.81 == Approx(0.1354).epsilon(1e-3));
}

TEST_CASE("planform outline") {
    const auto g = wing(0.02, 0.05, 0.06);
    const auto pts = planform_outline(g, 51);
    REQUIRE(pts.size() == 51);
    CHECK(pts.front().r == Approx(g.root_radius()));
    CHECK(pts.back().r == Approx(g.tip_radius));
    CHECK(pts.back().chord == 0.0);
    for (const auto& p : pts) {
        CHECK(p.leading_edge_y == 0.0);
        CHECK(p.trailing_edge_y == -p.chord);
    }
}

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(WingGeometry({0.0, 0.2, 0.01, 0.01, 0.01}).validate(), DomainError);
    CHECK_THROWS_AS(WingGeometry({std::numbers::pi / 2, 0.2, 0.01, 0.01, 0.01}).validate(), DomainError);
    CHECK_THROWS_AS(WingGeometry({0.4, 0.0, 0.01, 0.01, 0.01}).validate(), DomainError);
    CHECK_THROWS_AS(WingGeometry({0.4, 0.2, -0.01, 0.01, 0.01}).validate(), DomainError);
    CHECK_NOTHROW(WingGeometry({0.4, 0.2, 0.0, 0.0, 0.0}).validate());
}
