#include "samara/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "samara/error.hpp"

namespace samara {

const char* to_string(Termination t) noexcept {
    switch (t) {
        case Termination::tolerance: return "tolerance";
        case Termination::budget: return "budget";
    }
    return "unknown";
}

std::vector<std::vector<double>> initial_simplex(std::span<const double> seed, std::span<const double> min_step,
                                                 double relative_step) {
    if (seed.size() != min_step.size()) throw DomainError("initial simplex: step vector size mismatch");
    std::vector<std::vector<double>> simplex;
    simplex.emplace_back(seed.begin(), seed.end());
    for (std::size_t i = 0; i < seed.size(); ++i) {
        std::vector<double> v(seed.begin(), seed.end());
        v[i] += std::max(relative_step * std::abs(seed[i]), min_step[i]);
        simplex.push_back(std::move(v));
    }
    return simplex;
}

NelderMeadResult nelder_mead(const ObjectiveFn& f, std::vector<std::vector<double>> simplex,
                             const NelderMeadOptions& options, const IterationObserver& observer) {
    const std::size_t n = simplex.empty() ? 0 : simplex.front().size();
    if (n == 0 || simplex.size() != n + 1) throw DomainError("simplex needs n + 1 vertices of dimension n >= 1");
    for (const auto& v : simplex) {
        if (v.size() != n) throw DomainError("simplex vertices must share one dimension");
    }

    NelderMeadResult result;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        return f(x);
    };

    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s;
        std::vector<double> fv;
        s.reserve(n + 1);
        fv.reserve(n + 1);
        for (auto i : order) {
            s.push_back(std::move(simplex[i]));
            fv.push_back(values[i]);
        }
        simplex = std::move(s);
        values = std::move(fv);
    };

    auto affine = [n](const std::vector<double>& from, const std::vector<double>& to, double t) {
        std::vector<double> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = from[j] + t * (to[j] - from[j]);
        return x;
    };

    sort_simplex();
    result.termination = Termination::budget;
    while (true) {
        if (values.back() - values.front() < options.spread_tolerance) {
            result.termination = Termination::tolerance;
            break;
        }
        if (result.evaluations >= options.max_evaluations) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / static_cast<double>(n);
        }
        const auto& worst = simplex[n];

        const auto xr = affine(centroid, worst, -options.reflection);
        const double fr = eval(xr);
        if (fr < values.front()) {
            const auto xe = affine(centroid, worst, -options.reflection * options.expansion);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[n] = xe;
                values[n] = fe;
            } else {
                simplex[n] = xr;
                values[n] = fr;
            }
        } else if (fr < values[n - 1]) {
            simplex[n] = xr;
            values[n] = fr;
        } else {
            const bool outside = fr < values[n];
            const auto xc = outside ? affine(centroid, xr, options.contraction)
                                    : affine(centroid, worst, options.contraction);
            const double fc = eval(xc);
            if (fc < std::min(fr, values[n])) {
                simplex[n] = xc;
                values[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    simplex[i] = affine(simplex[0], simplex[i], options.shrink);
                    values[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
        ++result.iterations;
        if (observer) observer(result.iterations, values.front());
    }

    result.best = simplex.front();
    result.value = values.front();
    return result;
}

}  // namespace samara
