#include "thermx/gas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace thermx {

double GasSpec::phi() const {
    return activation_energy / (gas_constant * wall_temperature);
}

double GasSpec::prandtl() const {
    return kinematic_viscosity / molecular_diffusivity;
}

double GasSpec::reynolds() const {
    return 2.0 * discharge / (std::numbers::pi * pipe_radius * kinematic_viscosity);
}

void GasSpec::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("GasSpec: ") + name +
                                        " must be strictly positive and finite");
        }
    };
    positive(heat_capacity, "heat_capacity");
    positive(molecular_diffusivity, "molecular_diffusivity");
    positive(kinematic_viscosity, "kinematic_viscosity");
    positive(heat_of_reaction, "heat_of_reaction");
    positive(preexponential, "preexponential");
    positive(activation_energy, "activation_energy");
    positive(gas_constant, "gas_constant");
    positive(wall_temperature, "wall_temperature");
    positive(pipe_radius, "pipe_radius");
    positive(discharge, "discharge");
    positive(diffusivity_factor, "diffusivity_factor");
    if (!(phi() > 1.0)) {
        throw std::invalid_argument(
            "GasSpec: E/(R T0) must exceed 1; the high-activation-energy "
            "reduction does not apply");
    }
}

std::vector<std::string> GasSpec::warnings() const {
    std::vector<std::string> w;
    if (phi() < 10.0) {
        w.push_back("E/(R T0) = " + std::to_string(phi()) +
                    " is below 10; the exponential-source approximation "
                    "loses accuracy");
    }
    return w;
}

namespace {

double laminar_ell_squared(const GasSpec& gas) {
    double p = gas.phi();
    return std::exp(p) * gas.molecular_diffusivity * gas.wall_temperature *
           gas.heat_capacity / (gas.heat_of_reaction * p * gas.preexponential);
}

} // namespace

LambdaScale lambda_from_gas(const GasSpec& gas, FlowRegime::Kind kind) {
    gas.validate();
    double ell2 = laminar_ell_squared(gas);
    LambdaScale out;
    if (kind == FlowRegime::Kind::Laminar) {
        out.regime = FlowRegime::laminar();
    } else {
        double re = gas.reynolds();
        out.regime = FlowRegime::turbulent(re);
        double alpha = out.regime.alpha;
        double w = friction_reynolds(re);
        ell2 *= gas.prandtl() * gas.diffusivity_factor /
                (std::pow(2.0, 1.0 - alpha) * alpha * out.regime.c_alpha) *
                std::pow(w, 1.0 - alpha);
    }
    if (!(ell2 > 0.0) || !std::isfinite(ell2)) {
        throw std::invalid_argument("lambda_from_gas: nonpositive length scale");
    }
    out.ell = std::sqrt(ell2);
    out.lambda = gas.pipe_radius / out.ell;
    return out;
}

double critical_length_laminar(double r0, double re, double pr, double zeta0) {
    return r0 * re * pr * zeta0;
}

double critical_length_turbulent(double r0, double alpha, double w,
                                 double a_factor, double zeta0) {
    double c = c_of_alpha(alpha);
    return r0 * alpha * c * c * std::pow(w, 2.0 * alpha) * zeta0 /
           (std::pow(2.0, alpha) * a_factor);
}

double dimensional_critical_length(const GasSpec& gas, const FlowRegime& regime,
                                   double zeta0) {
    if (regime.is_turbulent()) {
        return critical_length_turbulent(gas.pipe_radius, regime.alpha,
                                         friction_reynolds(regime.re),
                                         gas.diffusivity_factor, zeta0);
    }
    return critical_length_laminar(gas.pipe_radius, gas.reynolds(),
                                   gas.prandtl(), zeta0);
}

} // namespace thermx
