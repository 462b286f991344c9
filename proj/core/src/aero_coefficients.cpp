#include "samara/aero_coefficients.hpp"

#include <cmath>

#include "samara/error.hpp"

namespace samara {

void AeroCoefficients::validate() const {
    if (!(rho > 0.0)) throw DomainError("air density must be positive");
    if (!(c_l1 > 0.0)) throw DomainError("c_l1 must be positive");
    if (!(c_d0 >= 0.0)) throw DomainError("c_d0 must be non-negative");
    if (!(c_d1 >= 0.0)) throw DomainError("c_d1 must be non-negative");
}

double lift_coefficient(double alpha, const AeroCoefficients& coeffs) noexcept {
    return coeffs.c_l1 * std::sin(2.0 * alpha);
}

double drag_coefficient(double alpha, const AeroCoefficients& coeffs) noexcept {
    return coeffs.c_d0 + coeffs.c_d1 * (1.0 - std::cos(2.0 * alpha));
}

}  // namespace samara
