#include "samara/wing_aero.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "samara/error.hpp"

namespace samara {
namespace {

constexpr double kPi = std::numbers::pi;

struct Residuals {
    double thrust;
    double torque;
};

Residuals relative_residuals(const MomentumLoads& mt, const BladeElementLoads& be, double floor) noexcept {
    const double t_scale = std::max({std::abs(mt.dT_dr), std::abs(be.dT_dr), floor});
    const double q_scale = std::max({std::abs(mt.dQ_dr), std::abs(be.dQ_dr), floor});
    return {std::abs(mt.dT_dr - be.dT_dr) / t_scale, std::abs(mt.dQ_dr - be.dQ_dr) / q_scale};
}

// Velocities that would make the momentum loads equal the given blade-element loads.
std::array<double, 2> momentum_inverse(double r, double rho, const BladeElementLoads& be) noexcept {
    const double v_a = std::sqrt(std::max(be.dT_dr, 0.0) / (4.0 * kPi * r * rho));
    const double v_t = v_a > 0.0 ? be.dQ_dr / (4.0 * kPi * r * r * rho * v_a) : 0.0;
    return {v_a, v_t};
}

}  // namespace

MomentumLoads momentum_loads(double r, double v_a, double v_theta, double rho) noexcept {
    return {4.0 * kPi * r * rho * v_a * v_a, 4.0 * kPi * r * r * rho * v_theta * v_a};
}

BladeElementLoads blade_element_loads(double r, double omega, double chord, double beta, double v_a,
                                      double v_theta, const AeroCoefficients& coeffs) noexcept {
    const double tangential = omega * r - v_theta;
    const double epsilon = std::atan2(v_a, tangential);
    const double alpha = beta - epsilon;
    const double v_b2 = tangential * tangential + v_a * v_a;
    const double q = WingGeometry::kAirfoilCount * 0.5 * coeffs.rho * v_b2 * chord;
    const double cl = lift_coefficient(alpha, coeffs);
    const double cd = drag_coefficient(alpha, coeffs);
    const double ce = std::cos(epsilon);
    const double se = std::sin(epsilon);
    return {q * (cl * ce - cd * se), r * q * (cl * se + cd * ce), epsilon, alpha, std::sqrt(v_b2)};
}

StationSolution solve_station(double r, double omega, double chord, double beta, const AeroCoefficients& coeffs,
                              const StationSolverOptions& options) {
    if (!(r > 0.0)) throw DomainError("station radius must be positive");
    if (!(omega > 0.0)) throw DomainError("revolving rate must be positive");
    if (!(chord >= 0.0)) throw DomainError("chord must be non-negative");
    if (!(beta > 0.0 && beta < kPi / 2.0)) throw DomainError("pitch must lie in (0, pi/2)");

    StationSolution s;
    s.r = r;
    s.chord = chord;
    if (chord == 0.0) {
        s.v_b = omega * r;
        s.alpha = beta;
        return s;
    }

    const double speed = omega * r;
    std::array<double, 2> v{0.05 * speed, 0.0};

    auto evaluate = [&](const std::array<double, 2>& x, Residuals& res) {
        const auto be = blade_element_loads(r, omega, chord, beta, x[0], x[1], coeffs);
        res = relative_residuals(momentum_loads(r, x[0], x[1], coeffs.rho), be, options.residual_floor);
        return be;
    };
    auto fixed_point_gap = [&](const std::array<double, 2>& x) {
        const auto be = blade_element_loads(r, omega, chord, beta, x[0], x[1], coeffs);
        const auto target = momentum_inverse(r, coeffs.rho, be);
        return std::array<double, 2>{x[0] - target[0], x[1] - target[1]};
    };

    Residuals res{};
    for (int it = 0; it <= options.max_iterations; ++it) {
        const auto be = evaluate(v, res);
        if (res.thrust < options.tolerance && res.torque < options.tolerance) {
            const auto mt = momentum_loads(r, v[0], v[1], coeffs.rho);
            s.v_a = v[0];
            s.v_theta = v[1];
            s.alpha = be.alpha;
            s.epsilon = be.epsilon;
            s.v_b = be.v_b;
            s.dT_dr = mt.dT_dr;
            s.dQ_dr = mt.dQ_dr;
            s.thrust_residual = res.thrust;
            s.torque_residual = res.torque;
            s.iterations = it;
            s.negative_alpha = be.alpha < 0.0;
            return s;
        }
        if (it == options.max_iterations) break;

        if (it < options.fixed_point_iterations) {
            const auto target = momentum_inverse(r, coeffs.rho, be);
            v[0] += options.damping * (target[0] - v[0]);
            v[1] += options.damping * (target[1] - v[1]);
            continue;
        }

        // Newton on x - Phi(x) with a forward-difference Jacobian.
        const auto g = fixed_point_gap(v);
        const double h = 1e-7 * speed;
        double jac[2][2];
        for (int j = 0; j < 2; ++j) {
            auto xp = v;
            xp[j] += h;
            const auto gp = fixed_point_gap(xp);
            jac[0][j] = (gp[0] - g[0]) / h;
            jac[1][j] = (gp[1] - g[1]) / h;
        }
        const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if (det == 0.0 || !std::isfinite(det)) {
            const auto target = momentum_inverse(r, coeffs.rho, be);
            v[0] += options.damping * (target[0] - v[0]);
            v[1] += options.damping * (target[1] - v[1]);
            continue;
        }
        std::array<double, 2> step{(jac[1][1] * g[0] - jac[0][1] * g[1]) / det,
                                   (jac[0][0] * g[1] - jac[1][0] * g[0]) / det};
        const double gap = std::hypot(g[0], g[1]);
        double lambda = 1.0;
        for (int k = 0; k < 30; ++k, lambda *= 0.5) {
            const std::array<double, 2> trial{v[0] - lambda * step[0], v[1] - lambda * step[1]};
            if (trial[0] <= 0.0 || trial[1] >= speed) continue;
            const auto gt = fixed_point_gap(trial);
            if (std::hypot(gt[0], gt[1]) < gap) break;
        }
        v = {v[0] - lambda * step[0], v[1] - lambda * step[1]};
    }

    std::ostringstream msg;
    msg << "station solve did not converge at r=" << r << " m (thrust residual " << res.thrust
        << ", torque residual " << res.torque << ")";
    throw SolverError(msg.str(), res.thrust, res.torque);
}

WingAeroResult solve_wing(const WingGeometry& geometry, const AeroCoefficients& coeffs, double omega,
                          const WingSolverOptions& options) {
    geometry.validate();
    coeffs.validate();
    if (options.station_count < 16) throw DomainError("station_count must be at least 16");
    if (!(omega > 0.0)) throw DomainError("revolving rate must be positive");

    const ChordProfile chord(geometry);
    const double h = geometry.span() / options.station_count;
    WingAeroResult out;
    out.omega = omega;
    out.stations.reserve(static_cast<std::size_t>(options.station_count));
    double thrust = 0.0;
    double torque = 0.0;
    for (int i = 0; i < options.station_count; ++i) {
        const double r = geometry.root_radius() + (i + 0.5) * h;
        StationSolution st;
        try {
            st = solve_station(r, omega, chord(r), geometry.pitch, coeffs, options.station);
        } catch (const SolverError& e) {
            std::ostringstream msg;
            msg << "wing solve failed at station " << i << " (r=" << r << " m): " << e.what();
            throw SolverError(msg.str(), e.residual_a(), e.residual_b());
        }
        thrust += st.dT_dr * h;
        torque += st.dQ_dr * h;
        out.any_negative_alpha = out.any_negative_alpha || st.negative_alpha;
        out.stations.push_back(st);
    }
    out.thrust_coefficient = thrust / (omega * omega);
    out.torque_coefficient = torque / (omega * omega);
    return out;
}

WingAeroResult wing_coefficients(const WingGeometry& geometry, const AeroCoefficients& coeffs,
                                 const WingSolverOptions& options) {
    return solve_wing(geometry, coeffs, options.reference_omega, options);
}

}  // namespace samara
