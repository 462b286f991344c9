#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "samara/error.hpp"
#include "samara/profile.hpp"
#include "samara/propulsion.hpp"
#include "support.hpp"

using namespace samara;
using doctest::Approx;

namespace {

const PropellerParams kProp;
const MotorParams kMotor;
constexpr double kRho = 1.2;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("induced velocity satisfies both thrust forms") {
    for (double w : {500.0, 1500.0, 2500.0, 3000.0}) {
        for (double u : {0.0, 1.0, 4.0, 8.0}) {
            const auto vi = induced_velocity(w, u, kProp, kRho);
            if (vi.stalled) continue;
            CHECK(rel(momentum_thrust(vi.v_i, u, kProp, kRho), blade_element_thrust(w, vi.v_i, u, kProp, kRho)) <
                  1e-10);
            CHECK(vi.v_i >= 0.0);
        }
    }
}

TEST_CASE("induced velocity matches bisection") {
    const auto vi = induced_velocity(2500.0, 0.0, kProp, kRho);
    const oracle::Prop p{kProp.radius, 2.0, kProp.a0, kProp.a1, kProp.a2, kProp.kappa, kMotor.resistance,
                         kMotor.back_emf_k};
    CHECK(std::abs(vi.v_i - oracle::induced_velocity_bisect(2500.0, 0.0, p, kRho)) < 1e-8);
    CHECK(std::abs(induced_velocity(2000.0, 3.0, kProp, kRho).v_i -
                   oracle::induced_velocity_bisect(2000.0, 3.0, p, kRho)) < 1e-8);
}

TEST_CASE("stalled propeller reports zero induced velocity") {
    // blade-element thrust is negative at v_i = 0 once a1 u > a0 omega R_p
    const auto vi = induced_velocity(100.0, 10.0, kProp, kRho);
    CHECK(vi.stalled);
    CHECK(vi.v_i == 0.0);
    const auto state = propeller_at_speed(100.0, 10.0, kProp, kRho);
    CHECK(state.stalled);
    CHECK(state.thrust < 0.0);  // windmilling is reported as-is, not clamped
}

TEST_CASE("thrust falls with inflow at fixed spin rate") {
    double prev = 1e9;
    for (int i = 0; i <= 100; ++i) {
        const double u = 0.1 * i;
        const double t = propeller_at_speed(2500.0, u, kProp, kRho).thrust;
        CHECK(t < prev);
        prev = t;
    }
}

TEST_CASE("propeller torque terms") {
    const double w = 2500.0;
    const double profile = 0.5 * kRho * 2 * std::pow(kProp.radius, 5) * kProp.a2 * w * w;
    CHECK(propeller_torque(w, 1.0, 0.0, 0.0, kProp, kRho) == Approx(profile).epsilon(1e-15));

    const auto vi = induced_velocity(w, 0.0, kProp, kRho).v_i;
    const double t = blade_element_thrust(w, vi, 0.0, kProp, kRho);
    const double expected = profile + t * (kProp.kappa * vi + 0.0) / w;
    CHECK(propeller_torque(w, vi, 0.0, t, kProp, kRho) == Approx(expected).epsilon(1e-14));

    PropellerParams ideal = kProp;
    ideal.kappa = 1.0;
    const double diff = propeller_torque(w, vi, 0.0, t, kProp, kRho) - propeller_torque(w, vi, 0.0, t, ideal, kRho);
    CHECK(diff == Approx(t * 0.87 * vi / w).epsilon(1e-12));
}

TEST_CASE("frictionless propeller runs at the back-EMF limit") {
    PropellerParams ghost = kProp;
    ghost.a0 = 1e-15;
    ghost.a1 = 0.0;
    ghost.a2 = 0.0;
    const auto s = solve_operating_point(3.5, 0.0, ghost, kMotor, kRho);
    CHECK(s.omega_prop == Approx(3.5 / 1.1e-3).epsilon(1e-6));
    CHECK(s.omega_prop == Approx(3181.8).epsilon(1e-4));
}

TEST_CASE("static thrust at max voltage") {
    const auto s = solve_operating_point(3.5, 0.0, kProp, kMotor, kRho);
    CHECK(s.thrust >= 0.090);
    CHECK(s.thrust <= 0.180);
    CHECK(s.torque_residual < 1e-9);
    CHECK(s.omega_prop > 0.0);
    CHECK(s.omega_prop < 3.5 / kMotor.back_emf_k);
}

TEST_CASE("coupled thrust matches the independent solve") {
    const oracle::Prop p{kProp.radius, 2.0, kProp.a0, kProp.a1, kProp.a2, kProp.kappa, kMotor.resistance,
                         kMotor.back_emf_k};
    for (double u : {0.0, 2.5, 7.0}) {
        for (double v : {1.0, 2.3, 3.5}) {
            if (u >= 3.0 * v) continue;  // windmilling at the back-EMF limit
            CHECK(solve_operating_point(v, u, kProp, kMotor, kRho).thrust ==
                  Approx(oracle::propeller_thrust(v, u, p, kRho)).epsilon(1e-9));
        }
    }
}

TEST_CASE("inflow lowers thrust and raises spin rate") {
    double t_prev = 1e9, w_prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const auto s = solve_operating_point(3.5, 0.1 * i, kProp, kMotor, kRho);
        CHECK(s.thrust < t_prev);
        CHECK(s.omega_prop > w_prev);
        t_prev = s.thrust;
        w_prev = s.omega_prop;
    }
}

TEST_CASE("operating point invariants") {
    for (double v = 0.5; v <= 3.5; v += 0.5) {
        for (double u = 0.0; u < 3.0 * v; u += 0.5) {
            const auto s = solve_operating_point(v, u, kProp, kMotor, kRho);
            CHECK(s.torque_residual < 1e-9);
            CHECK(s.omega_prop > 0.0);
            CHECK(s.omega_prop < v / kMotor.back_emf_k);
            CHECK(s.torque > 0.0);
            CHECK(s.v_i >= 0.0);
            // electrical power covers shaft power
            CHECK(v * s.torque / kMotor.back_emf_k >= s.torque * s.omega_prop);
            CHECK(motor_torque(v, s.omega_prop, kMotor) == Approx(s.torque).epsilon(1e-9));
        }
    }
}

TEST_CASE("no balance when the propeller windmills even at the back-EMF limit") {
    // a1 u > a0 R_p U / k: blade-element thrust is negative at every admissible spin rate
    CHECK_THROWS_AS(solve_operating_point(1.0, 7.0, kProp, kMotor, kRho), SolverError);
}

TEST_CASE("thrust map") {
    const double r_m = crazyflie_bench().propulsion.mount_radius;
    CHECK(thrust_map(3.5, 0.0, r_m, kProp, kMotor, kRho) == solve_operating_point(3.5, 0.0, kProp, kMotor, kRho).thrust);
    double prev = 1e9;
    for (int i = 0; i <= 600; ++i) {
        const double t = thrust_map(3.5, 0.1 * i, r_m, kProp, kMotor, kRho);
        CHECK(t < prev);
        if (i > 0) CHECK(prev - t < 0.01);  // no jumps on a 0.1 rad/s grid
        prev = t;
    }
    // finite-difference monotonicity in both arguments
    for (double v = 1.0; v <= 3.4; v += 0.4) {
        for (double om = 5.0; om <= 50.0; om += 9.0) {
            if (om * r_m >= 3.0 * v) continue;  // outside the powered envelope
            CHECK(oracle::central_difference([&](double x) { return thrust_map(x, om, r_m, kProp, kMotor, kRho); },
                                             v, 1e-4) > 0.0);
            CHECK(oracle::central_difference([&](double x) { return thrust_map(v, x, r_m, kProp, kMotor, kRho); },
                                             om, 1e-4) < 0.0);
        }
    }
}

TEST_CASE("frozen spin rate underestimates thrust at high inflow") {
    const auto still = solve_operating_point(3.5, 0.0, kProp, kMotor, kRho);
    for (double u = 2.5; u <= 10.0; u += 0.5) {
        const double coupled = solve_operating_point(3.5, u, kProp, kMotor, kRho).thrust;
        const double frozen = propeller_at_speed(still.omega_prop, u, kProp, kRho).thrust;
        CHECK(frozen < coupled);
    }
}

TEST_CASE("operating point preconditions") {
    CHECK_THROWS_AS(solve_operating_point(0.0, 0.0, kProp, kMotor, kRho), DomainError);
    CHECK_THROWS_AS(solve_operating_point(3.6, 0.0, kProp, kMotor, kRho), DomainError);
    CHECK_THROWS_AS(solve_operating_point(3.0, -1.0, kProp, kMotor, kRho), DomainError);
    CHECK_THROWS_AS(induced_velocity(0.0, 0.0, kProp, kRho), DomainError);
}
