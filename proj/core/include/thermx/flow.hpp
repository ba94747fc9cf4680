#ifndef THERMX_FLOW_HPP
#define THERMX_FLOW_HPP

#include <string>
#include <vector>

namespace thermx {

/// Flow regime of the gas in the pipe. Laminar flow carries no parameters;
/// developed turbulent flow is characterized by the Reynolds number
/// Re = 2 v_mean r0 / nu0 and the derived power-law exponent alpha with its
/// profile constant C(alpha).
///
/// Values are immutable after construction and safe to share across threads.
struct FlowRegime {
    enum class Kind { Laminar, Turbulent };

    Kind kind = Kind::Laminar;
    double re = 0.0;       // Reynolds number (turbulent only)
    double alpha = 0.0;    // power-law exponent 3 / (2 ln Re)
    double c_alpha = 0.0;  // profile constant (sqrt(3) + 5 alpha) / (2 alpha)

    static FlowRegime laminar() { return {}; }

    /// Builds a turbulent regime from the Reynolds number.
    /// Throws std::invalid_argument for Re <= 1.
    static FlowRegime turbulent(double re);

    bool is_turbulent() const { return kind == Kind::Turbulent; }

    /// Human-readable advisories (e.g. Re outside the developed-turbulence
    /// window [2e3, 1e9]). Never fatal.
    std::vector<std::string> warnings() const;
};

/// Power-law exponent of the turbulent velocity profile, alpha = 3/(2 ln Re).
/// Throws std::invalid_argument for Re <= 1 (nonpositive logarithm).
double alpha_of_re(double re);

/// Profile constant C(alpha) = (sqrt(3) + 5 alpha) / (2 alpha).
/// Throws std::invalid_argument for alpha <= 0.
double c_of_alpha(double alpha);

/// Velocity profile factor at radius rho in [0, 1]:
///   laminar    2 (1 - rho^2)   (normalized by the mean velocity, mean 1)
///   turbulent  (1 - rho)^alpha (power-law shape entering the axial term)
double advection_coefficient(const FlowRegime& regime, double rho);

/// Coefficient multiplying the axial derivative in the dimensionless
/// transport equation actually marched by the grid solver:
///   laminar    1 - rho^2
///   turbulent  (1 - rho)^alpha
/// The laminar axial coordinate absorbs the factor 2 of the velocity
/// profile, which is why this differs from advection_coefficient there.
double axial_coefficient(const FlowRegime& regime, double rho);

/// Radial flux weight a(rho) inside (1/rho) d/drho [ a(rho) du/drho ]:
///   laminar    rho
///   turbulent  rho^2 (1 - rho)^(1 - alpha)
/// Degenerate at both endpoints in the turbulent case.
double diffusion_weight(const FlowRegime& regime, double rho);

/// Friction Reynolds number W = v_* d / nu0 for developed turbulent flow,
/// obtained by closing the power-law profile with the mean-flow identity
///   Re = C(alpha) 2^(1-alpha) / ((alpha+1)(alpha+2)) * W^(1+alpha).
/// Throws std::invalid_argument for Re <= 1.
double friction_reynolds(double re);

} // namespace thermx

#endif // THERMX_FLOW_HPP
