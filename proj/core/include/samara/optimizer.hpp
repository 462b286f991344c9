#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "samara/equilibrium.hpp"
#include "samara/nelder_mead.hpp"
#include "samara/robot.hpp"

namespace samara {

/// The six design variables: pitch, motor mount radius, wing tip radius and
/// the three chord control values.
struct DesignVector {
    double beta = 0.0;   // [rad]
    double r_m = 0.0;    // [m]
    double r_tip = 0.0;  // [m]
    double c1 = 0.0;     // [m]
    double c2 = 0.0;     // [m]
    double c3 = 0.0;     // [m]

    static constexpr std::size_t kSize = 6;

    std::array<double, kSize> to_array() const noexcept { return {beta, r_m, r_tip, c1, c2, c3}; }
    static DesignVector from_array(std::span<const double> x);

    WingGeometry wing() const noexcept { return {beta, r_tip, c1, c2, c3}; }
    static DesignVector from_robot(const RobotModel& robot) noexcept;

    friend bool operator==(const DesignVector&, const DesignVector&) = default;
};

struct DesignConstraints {
    double max_tip_radius = 0.23;  // [m]
};

/// Sum of constraint violations in metres/radians; zero iff feasible.
/// Covers r_m >= r_tip, r_tip <= max, chords >= 0, a non-negative chord
/// spline and 0 < beta < pi/2.
double constraint_violation(const DesignVector& x, const DesignConstraints& constraints);

/// Nearest point satisfying the box-like constraints (not the spline sign).
DesignVector repair(const DesignVector& x, const DesignConstraints& constraints);

/// Base robot with the wing and mount radius replaced by the design.
RobotModel apply_design(const RobotModel& base, const DesignVector& x);

struct OptimizationContext {
    RobotModel base;  // aero, propulsion, mass and environment; wing/mount radius are overridden
    SolverSettings settings;
    double voltage = 3.5;             // [V] drive voltage the payload is evaluated at
    double penalty_weight = 1e3;      // [N per m or rad of violation]
    double trim_failure_penalty = 1.0;  // [N] subtracted when a feasible design cannot trim
    DesignConstraints constraints;
};

struct DesignEvaluation {
    double value = 0.0;  // payload T_R - m g, penalized when infeasible [N]
    double violation = 0.0;
    bool feasible = false;
    bool trimmed = false;
    double thrust = 0.0;
    double weight = 0.0;
};

DesignEvaluation evaluate_design(const DesignVector& x, const OptimizationContext& context);

/// Payload objective to be maximized.
double objective(const DesignVector& x, const OptimizationContext& context);

struct OptimizerOptions {
    NelderMeadOptions nelder_mead;  // spread tolerance 1e-6 N, 2000 evaluations by default
    double relative_step = 0.05;
    double min_length_step = 1e-3;          // [m]
    double min_angle_step = 0.017453292519943295;  // 1 degree [rad]
};

struct HistoryEntry {
    std::size_t iteration;
    double best_objective;
};

struct OptimizationReport {
    DesignVector best;
    double objective = 0.0;
    std::optional<TrimState> trim_at_best;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;  // distinct objective evaluations (cache misses)
    Termination termination = Termination::budget;
    std::vector<HistoryEntry> history;
};

/// Maximizes an arbitrary design objective; returns the best feasible point visited.
using DesignObjective = std::function<DesignEvaluation(const DesignVector&)>;

OptimizationReport optimize(const DesignVector& seed, const DesignObjective& objective,
                            const OptimizerOptions& options = {});

/// Maximizes payload over the design space; throws DomainError for an infeasible seed.
OptimizationReport optimize(const DesignVector& seed, const OptimizationContext& context,
                            const OptimizerOptions& options = {});

}  // namespace samara
