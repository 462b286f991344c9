#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "samara/error.hpp"
#include "samara/optimizer.hpp"
#include "samara/profile.hpp"

using namespace samara;
using doctest::Approx;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

OptimizationContext bench_context() {
    OptimizationContext ctx;
    ctx.base = crazyflie_bench();
    return ctx;
}

}  // namespace

TEST_CASE("constraint violation") {
    const DesignConstraints c;
    CHECK(constraint_violation(reference_design(), c) == 0.0);
    CHECK(constraint_violation(rectangular_seed(), c) == 0.0);

    auto x = rectangular_seed();
    x.r_m = x.r_tip - 0.01;
    CHECK(constraint_violation(x, c) == Approx(0.01));
    x = rectangular_seed();
    x.r_tip = x.r_m = 0.25;
    CHECK(constraint_violation(x, c) == Approx(0.02));
    x = rectangular_seed();
    x.c2 = -0.01;
    CHECK(constraint_violation(x, c) >= 0.01);
    x = rectangular_seed();
    x.beta = -0.1;
    CHECK(constraint_violation(x, c) > 0.1);
    x = rectangular_seed();
    x.c1 = 0.06;
    x.c2 = 0.0;
    x.c3 = 0.0;  // spline dips below zero between the knots
    CHECK(constraint_violation(x, c) > 0.0);

    const auto fixed = repair(DesignVector{-0.1, 0.1, 0.3, -0.01, 0.02, 0.03}, c);
    CHECK(fixed.beta > 0.0);
    CHECK(fixed.r_tip <= 0.23);
    CHECK(fixed.r_m >= fixed.r_tip);
    CHECK(fixed.c1 >= 0.0);
}

TEST_CASE("chordless wing scores minus its weight") {
    const auto ctx = bench_context();
    DesignVector x = rectangular_seed();
    x.c1 = x.c2 = x.c3 = 0.0;
    const auto robot = apply_design(ctx.base, x);
    CHECK(objective(x, ctx) == -robot.mass_kg() * robot.environment.gravity);
}

TEST_CASE("infeasible designs score below every feasible one") {
    const auto ctx = bench_context();
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_feasible = 1e9;
    for (int i = 0; i < 40; ++i) {
        const double tip = 0.1 + 0.13 * u(rng);
        const DesignVector x{(5 + 50 * u(rng)) * kDeg, tip + 0.005 * u(rng), tip, 0.08 * u(rng), 0.08 * u(rng),
                             0.08 * u(rng)};
        if (constraint_violation(x, ctx.constraints) > 0.0) continue;
        worst_feasible = std::min(worst_feasible, objective(x, ctx));
    }
    auto bad = reference_design();
    bad.r_m = bad.r_tip - 1e-3;
    CHECK(objective(bad, ctx) < worst_feasible);
    CHECK_FALSE(evaluate_design(bad, ctx).feasible);
}

TEST_CASE("reference design payload") {
    const auto ctx = bench_context();
    const auto e = evaluate_design(reference_design(), ctx);
    CHECK(e.feasible);
    CHECK(e.trimmed);
    CHECK(e.thrust >= 0.285 * 0.85);
    CHECK(e.thrust <= 0.285 * 1.15);
    CHECK(e.value == Approx(e.thrust - 0.0138 * 9.81).epsilon(1e-12));
}

TEST_CASE("optimizing from the rectangular seed") {
    const auto ctx = bench_context();
    const auto r = optimize(rectangular_seed(), ctx);

    CHECK(std::abs(r.best.beta / kDeg - 27.5) <= 4.0);
    CHECK(r.best.c3 > r.best.c1);
    CHECK(r.best.c3 > r.best.c2);
    CHECK(constraint_violation(r.best, ctx.constraints) == 0.0);
    CHECK(r.objective == objective(r.best, ctx));
    REQUIRE(r.trim_at_best);
    CHECK(r.trim_at_best->payload_margin == Approx(r.objective).epsilon(1e-12));
    CHECK(r.objective > objective(rectangular_seed(), ctx));

    REQUIRE_FALSE(r.history.empty());
    CHECK(r.history.front().iteration == 0);
    for (std::size_t i = 1; i < r.history.size(); ++i) {
        CHECK(r.history[i].best_objective >= r.history[i - 1].best_objective);
    }
    CHECK(r.history.back().best_objective == r.objective);
    CHECK(r.evaluations <= 2000);

    // frozen reference is this very run
    CHECK(r.best == reference_design());

    const auto again = optimize(rectangular_seed(), ctx);
    CHECK(again.best == r.best);
    CHECK(again.objective == r.objective);
}

TEST_CASE("a second seed lands within 5 percent") {
    const auto ctx = bench_context();
    const auto a = optimize(rectangular_seed(), ctx);
    const auto b = optimize(DesignVector{21.0 * kDeg, 0.23, 0.23, 0.05, 0.05, 0.05}, ctx);
    CHECK(std::abs(a.objective - b.objective) <= 0.05 * std::max(a.objective, b.objective));
}

TEST_CASE("optimized wing loads the root less than an equal-area rectangle") {
    const auto opt = reference_design().wing();
    const double area = wing_area(opt);
    const double c = area / opt.span();
    const WingGeometry rect{opt.pitch, opt.tip_radius, c, c, c};
    // natural spline through (c, c, c, 0) is not flat; rescale to equal area
    const double k = area / wing_area(rect);
    const WingGeometry equal{opt.pitch, opt.tip_radius, c * k, c * k, c * k};
    CHECK(wing_area(equal) == Approx(area).epsilon(1e-12));

    const auto a = solve_wing(opt, AeroCoefficients{}, 37.0);
    const auto b = solve_wing(equal, AeroCoefficients{}, 37.0);
    double qa = 0.0, qb = 0.0;
    for (std::size_t i = 0; i < a.stations.size() / 3; ++i) {
        qa += a.stations[i].dQ_dr;
        qb += b.stations[i].dQ_dr;
    }
    CHECK(qa < qb);
}

TEST_CASE("infeasible seed is rejected") {
    auto x = rectangular_seed();
    x.r_m = 0.1;
    CHECK_THROWS_AS(optimize(x, bench_context()), DomainError);
}

TEST_CASE("budget exhaustion still yields a feasible report") {
    OptimizerOptions opts;
    opts.nelder_mead.max_evaluations = 25;
    const auto r = optimize(rectangular_seed(), bench_context(), opts);
    CHECK(r.termination == Termination::budget);
    CHECK(constraint_violation(r.best, DesignConstraints{}) == 0.0);
}
