#include "samara/spline.hpp"

#include <algorithm>
#include <cmath>

#include "samara/error.hpp"

namespace samara {

NaturalCubicSpline::NaturalCubicSpline(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()), m_(x.size(), 0.0) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw DomainError("spline needs at least two knots and matching values");
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) throw DomainError("spline knots must be strictly increasing");
    }
    if (n == 2) return;

    // Thomas algorithm on the interior second derivatives.
    const std::size_t k = n - 2;
    std::vector<double> diag(k), upper(k), rhs(k);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        diag[i - 1] = 2.0 * (h0 + h1);
        upper[i - 1] = h1;
        rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    for (std::size_t i = 1; i < k; ++i) {
        const double lower = x_[i + 1] - x_[i];
        const double w = lower / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m_[k] = rhs[k - 1] / diag[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) {
        m_[i + 1] = (rhs[i] - upper[i] * m_[i + 2]) / diag[i];
    }
}

std::size_t NaturalCubicSpline::segment(double x) const noexcept {
    const auto it = std::upper_bound(x_.begin() + 1, x_.end() - 1, x);
    return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double NaturalCubicSpline::value(double x) const noexcept {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double NaturalCubicSpline::derivative(double x) const noexcept {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return (y_[i + 1] - y_[i]) / h + ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
}

double NaturalCubicSpline::minimum() const noexcept {
    double lowest = *std::min_element(y_.begin(), y_.end());
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        // s'(t) on segment i as a quadratic in t = x - x_i.
        const double h = x_[i + 1] - x_[i];
        const double qa = (m_[i + 1] - m_[i]) / (2.0 * h);
        const double qb = m_[i];
        const double qc = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
        double roots[2];
        int count = 0;
        if (std::abs(qa) < 1e-300) {
            if (qb != 0.0) roots[count++] = -qc / qb;
        } else {
            const double disc = qb * qb - 4.0 * qa * qc;
            if (disc >= 0.0) {
                const double s = std::sqrt(disc);
                roots[count++] = (-qb + s) / (2.0 * qa);
                roots[count++] = (-qb - s) / (2.0 * qa);
            }
        }
        for (int j = 0; j < count; ++j) {
            if (roots[j] > 0.0 && roots[j] < h) lowest = std::min(lowest, value(x_[i] + roots[j]));
        }
    }
    return lowest;
}

}  // namespace samara
