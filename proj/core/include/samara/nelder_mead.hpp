#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace samara {

enum class Termination { tolerance, budget };

const char* to_string(Termination t) noexcept;

struct NelderMeadOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double spread_tolerance = 1e-6;    // stop when max f - min f over the simplex falls below this
    std::size_t max_evaluations = 2000;
};

struct NelderMeadResult {
    std::vector<double> best;
    double value = 0.0;
    std::size_t evaluations = 0;
    std::size_t iterations = 0;
    Termination termination = Termination::budget;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// Called after every iteration with the iteration index and the current best value.
using IterationObserver = std::function<void(std::size_t, double)>;

/// Seed plus one vertex per coordinate, displaced by
/// max(relative_step * |x_i|, min_step[i]).
std::vector<std::vector<double>> initial_simplex(std::span<const double> seed, std::span<const double> min_step,
                                                 double relative_step = 0.05);

/// Minimizes `f` starting from `simplex` (n + 1 vertices of dimension n).
/// Deterministic: ties are broken by vertex order.
NelderMeadResult nelder_mead(const ObjectiveFn& f, std::vector<std::vector<double>> simplex,
                             const NelderMeadOptions& options = {}, const IterationObserver& observer = {});

}  // namespace samara
