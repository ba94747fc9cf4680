#ifndef THERMX_GAS_HPP
#define THERMX_GAS_HPP

#include <string>
#include <vector>

#include "thermx/flow.hpp"

namespace thermx {

/// Dimensional gas, reaction, and reactor properties, SI units throughout.
///
/// The pre-exponential factor sigma0 is taken in the convention that
/// q * sigma0 / heat_capacity has units K/s, so that the reaction-conduction
/// length ell comes out in meters.
struct GasSpec {
    double heat_capacity = 0.0;          // c    [J m^-3 K^-1]
    double molecular_diffusivity = 0.0;  // kappa0 [m^2 s^-1]
    double kinematic_viscosity = 0.0;    // nu0  [m^2 s^-1]
    double heat_of_reaction = 0.0;       // Q    [J m^-3 per unit sigma-rate]
    double preexponential = 0.0;         // sigma(T0) [1/s convention above]
    double activation_energy = 0.0;      // E    [J mol^-1]
    double gas_constant = 8.314462618;   // R    [J mol^-1 K^-1]
    double wall_temperature = 0.0;       // T0   [K]
    double pipe_radius = 0.0;            // r0   [m]
    double discharge = 0.0;              // G    [m^3 s^-1]
    double diffusivity_factor = 1.0;     // A(Re, Pr), dimensionless

    /// Arrhenius number E / (R T0).
    double phi() const;

    /// Prandtl number nu0 / kappa0.
    double prandtl() const;

    /// Reynolds number 2 G / (pi r0 nu0) built on the mean velocity and the
    /// pipe diameter.
    double reynolds() const;

    /// Throws std::invalid_argument when a physical field is nonpositive or
    /// phi <= 1 (outside the high-activation-energy regime).
    void validate() const;

    /// Non-fatal advisories (phi below 10, Reynolds outside the
    /// developed-turbulence window when turbulent use is intended, ...).
    std::vector<std::string> warnings() const;
};

/// Dimensionless pipe radius and the reaction-conduction length it is built
/// from, for the given flow regime kind.
struct LambdaScale {
    double lambda = 0.0;  // r0 / ell
    double ell = 0.0;     // [m]
    FlowRegime regime;
};

/// Computes lambda = r0 / ell.
///
/// Laminar: ell^2 = e^phi kappa0 T0 c / (Q phi sigma(T0)).
/// Turbulent: the laminar ell^2 is multiplied by
///   Pr A / (2^(1-alpha) alpha C(alpha)) * W^(1-alpha),
/// with W the friction Reynolds number closed from Re = 2G/(pi r0 nu0).
/// Throws std::invalid_argument when the gas violates its invariants.
LambdaScale lambda_from_gas(const GasSpec& gas, FlowRegime::Kind kind);

/// Dimensional critical ("safe") reactor length from the dimensionless one.
/// Laminar: z0 = r0 Re Pr zeta0; turbulent:
/// z0 = r0 alpha C^2(alpha) W^(2 alpha) zeta0 / (2^alpha A).
double dimensional_critical_length(const GasSpec& gas, const FlowRegime& regime,
                                   double zeta0);

/// Same conversions from raw numbers, for use without a full GasSpec.
/// The turbulent form takes the profile exponent and friction Reynolds
/// number directly; C(alpha) is derived.
double critical_length_laminar(double r0, double re, double pr, double zeta0);
double critical_length_turbulent(double r0, double alpha, double w,
                                 double a_factor, double zeta0);

} // namespace thermx

#endif // THERMX_GAS_HPP
