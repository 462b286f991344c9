#pragma once

#include <span>
#include <vector>

namespace samara {

/// Natural cubic spline (zero second derivative at both ends) through
/// strictly increasing knots.
class NaturalCubicSpline {
public:
    NaturalCubicSpline(std::span<const double> x, std::span<const double> y);

    double operator()(double x) const noexcept { return value(x); }
    double value(double x) const noexcept;
    double derivative(double x) const noexcept;

    /// Smallest value attained on [front knot, back knot], found from the
    /// stationary points of each cubic segment.
    double minimum() const noexcept;

    std::span<const double> knots() const noexcept { return x_; }

private:
    std::size_t segment(double x) const noexcept;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace samara
