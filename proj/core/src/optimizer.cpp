#include "samara/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "samara/error.hpp"

namespace samara {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kMinPitch = 1e-4;
constexpr double kMinTip = 1e-3;

double positive(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace

DesignVector DesignVector::from_array(std::span<const double> x) {
    if (x.size() != kSize) throw DomainError("design vector needs six entries");
    return {x[0], x[1], x[2], x[3], x[4], x[5]};
}

DesignVector DesignVector::from_robot(const RobotModel& robot) noexcept {
    const auto& w = robot.wing;
    return {w.pitch, robot.propulsion.mount_radius, w.tip_radius, w.c1, w.c2, w.c3};
}

double constraint_violation(const DesignVector& x, const DesignConstraints& constraints) {
    double v = positive(x.r_tip - x.r_m) + positive(x.r_tip - constraints.max_tip_radius) +
               positive(kMinTip - x.r_tip) + positive(-x.c1) + positive(-x.c2) + positive(-x.c3) +
               positive(kMinPitch - x.beta) + positive(x.beta - (kHalfPi - kMinPitch));
    if (x.r_tip > 0.0) {
        const auto r = repair(x, constraints);
        v += -ChordProfile(r.wing()).negative_excursion();
    }
    return v;
}

DesignVector repair(const DesignVector& x, const DesignConstraints& constraints) {
    DesignVector r = x;
    r.beta = std::clamp(x.beta, kMinPitch, kHalfPi - kMinPitch);
    r.r_tip = std::clamp(x.r_tip, kMinTip, constraints.max_tip_radius);
    r.r_m = std::max(x.r_m, r.r_tip);
    r.c1 = std::max(x.c1, 0.0);
    r.c2 = std::max(x.c2, 0.0);
    r.c3 = std::max(x.c3, 0.0);
    return r;
}

RobotModel apply_design(const RobotModel& base, const DesignVector& x) {
    RobotModel robot = base;
    robot.wing = x.wing();
    robot.propulsion.mount_radius = x.r_m;
    return robot;
}

DesignEvaluation evaluate_design(const DesignVector& x, const OptimizationContext& context) {
    DesignEvaluation e;
    e.violation = constraint_violation(x, context.constraints);
    e.feasible = e.violation == 0.0;
    const auto robot = apply_design(context.base, repair(x, context.constraints));
    e.weight = robot.weight();

    const auto wing = wing_coefficients(robot.wing, robot.aero, context.settings.wing);
    double payload = 0.0;
    if (wing.torque_coefficient == 0.0) {
        // No surface, no drag: the wings carry nothing.
        payload = -e.weight;
        e.trimmed = true;
    } else {
        try {
            const auto trim = solve_trim(context.voltage, robot, wing, context.settings.trim);
            e.thrust = trim.thrust;
            e.trimmed = true;
            payload = trim.thrust - e.weight;
        } catch (const SolverError&) {
            payload = -e.weight - context.trim_failure_penalty;
        }
    }
    e.value = payload - context.penalty_weight * e.violation;
    return e;
}

double objective(const DesignVector& x, const OptimizationContext& context) { return evaluate_design(x, context).value; }

OptimizationReport optimize(const DesignVector& seed, const DesignObjective& objective,
                            const OptimizerOptions& options) {
    using Key = std::array<double, DesignVector::kSize>;
    std::map<Key, DesignEvaluation> cache;

    OptimizationReport report;
    double best_feasible = -std::numeric_limits<double>::infinity();
    bool have_feasible = false;

    auto evaluate = [&](const DesignVector& x) -> const DesignEvaluation& {
        const Key key = x.to_array();
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, objective(x)).first;
            ++report.evaluations;
            const auto& e = it->second;
            if (e.feasible && e.value > best_feasible) {
                best_feasible = e.value;
                report.best = x;
                have_feasible = true;
            }
        }
        return it->second;
    };

    if (!evaluate(seed).feasible) throw DomainError("optimization seed is infeasible");

    const auto x0 = seed.to_array();
    const std::array<double, DesignVector::kSize> min_step{options.min_angle_step,  options.min_length_step,
                                                           options.min_length_step, options.min_length_step,
                                                           options.min_length_step, options.min_length_step};
    auto simplex = initial_simplex(x0, min_step, options.relative_step);

    // Nelder-Mead minimizes; the payload is maximized.
    const ObjectiveFn f = [&](std::span<const double> x) { return -evaluate(DesignVector::from_array(x)).value; };
    report.history.push_back({0, best_feasible});
    const IterationObserver observer = [&](std::size_t iteration, double) {
        report.history.push_back({iteration, best_feasible});
    };
    const auto nm = nelder_mead(f, std::move(simplex), options.nelder_mead, observer);

    report.iterations = nm.iterations;
    report.termination = nm.termination;
    report.objective = best_feasible;
    if (!have_feasible) throw DomainError("optimization visited no feasible design");
    return report;
}

OptimizationReport optimize(const DesignVector& seed, const OptimizationContext& context,
                            const OptimizerOptions& options) {
    context.base.aero.validate();
    context.base.propulsion.validate();
    context.base.mass.validate();
    context.base.environment.validate();
    auto report = optimize(
        seed, [&](const DesignVector& x) { return evaluate_design(x, context); }, options);
    const auto robot = apply_design(context.base, report.best);
    try {
        report.trim_at_best = solve_trim(context.voltage, robot, context.settings);
    } catch (const Error&) {
        // Zero-chord designs and trim failures carry no trim state.
    }
    return report;
}

}  // namespace samara
