#pragma once

namespace samara {

/// Brushed DC motor, first-order steady-state model.
struct MotorParams {
    double resistance = 1.58;     // R_i [ohm]
    double back_emf_k = 1.1e-3;   // k [V s / rad]
    double max_voltage = 3.5;     // [V]

    void validate() const;
    friend bool operator==(const MotorParams&, const MotorParams&) = default;
};

/// Propeller with lumped blade-element coefficients.
struct PropellerParams {
    double radius = 0.023;  // R_p [m]
    int blade_count = 2;
    double a0 = 0.3633;
    double a1 = 1.9960;
    double a2 = 0.0022;
    double kappa = 1.87;  // induced power factor

    void validate() const;
    friend bool operator==(const PropellerParams&, const PropellerParams&) = default;
};

struct Environment {
    double gravity = 9.81;      // [m/s^2]
    double free_stream = 0.0;   // V_inf [m/s]; only hover (0) is supported

    void validate() const;
    friend bool operator==(const Environment&, const Environment&) = default;
};

/// Motors + propellers as mounted on the airframe at radius r_m.
struct PropulsionUnit {
    PropellerParams propeller;
    MotorParams motor;
    double mount_radius = 0.23;  // R_m [m]

    void validate() const;
    friend bool operator==(const PropulsionUnit&, const PropulsionUnit&) = default;
};

}  // namespace samara
