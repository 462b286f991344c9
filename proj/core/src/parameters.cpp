#include "samara/parameters.hpp"

#include "samara/error.hpp"

namespace samara {

void MotorParams::validate() const {
    if (!(resistance > 0.0)) throw DomainError("motor resistance must be positive");
    if (!(back_emf_k > 0.0)) throw DomainError("motor constant k must be positive");
    if (!(max_voltage > 0.0)) throw DomainError("max voltage must be positive");
}

void PropellerParams::validate() const {
    if (!(radius > 0.0)) throw DomainError("propeller radius must be positive");
    if (blade_count < 1) throw DomainError("propeller needs at least one blade");
    if (!(a0 > 0.0)) throw DomainError("a0 must be positive");
    if (!(a1 >= 0.0)) throw DomainError("a1 must be non-negative");
    if (!(a2 >= 0.0)) throw DomainError("a2 must be non-negative");
    if (!(kappa >= 1.0)) throw DomainError("induced power factor kappa must be >= 1");
}

void Environment::validate() const {
    if (!(gravity > 0.0)) throw DomainError("gravity must be positive");
    if (free_stream != 0.0) throw DomainError("only hover (zero free-stream velocity) is supported");
}

void PropulsionUnit::validate() const {
    propeller.validate();
    motor.validate();
    if (!(mount_radius > 0.0)) throw DomainError("motor mount radius must be positive");
}

}  // namespace samara
