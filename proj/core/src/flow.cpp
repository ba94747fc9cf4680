#include "thermx/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace thermx {

double alpha_of_re(double re) {
    if (!(re > 1.0)) {
        throw std::invalid_argument(
            "alpha_of_re: Re must exceed 1 (ln Re must be positive)");
    }
    return 1.5 / std::log(re);
}

double c_of_alpha(double alpha) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("c_of_alpha: alpha must be positive");
    }
    return (std::sqrt(3.0) + 5.0 * alpha) / (2.0 * alpha);
}

FlowRegime FlowRegime::turbulent(double re) {
    FlowRegime r;
    r.kind = Kind::Turbulent;
    r.re = re;
    r.alpha = alpha_of_re(re);
    r.c_alpha = c_of_alpha(r.alpha);
    return r;
}

std::vector<std::string> FlowRegime::warnings() const {
    std::vector<std::string> w;
    if (kind == Kind::Turbulent) {
        if (re < 2000.0 || re > 1e9) {
            w.push_back("Reynolds number " + std::to_string(re) +
                        " is outside the developed-turbulence window "
                        "[2e3, 1e9]; the power-law profile may not apply");
        }
    }
    return w;
}

namespace {

void check_rho(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("rho must lie in [0, 1]");
    }
}

} // namespace

double advection_coefficient(const FlowRegime& regime, double rho) {
    check_rho(rho);
    if (regime.is_turbulent()) {
        return std::pow(1.0 - rho, regime.alpha);
    }
    return 2.0 * (1.0 - rho * rho);
}

double axial_coefficient(const FlowRegime& regime, double rho) {
    check_rho(rho);
    if (regime.is_turbulent()) {
        return std::pow(1.0 - rho, regime.alpha);
    }
    return 1.0 - rho * rho;
}

double diffusion_weight(const FlowRegime& regime, double rho) {
    check_rho(rho);
    if (regime.is_turbulent()) {
        return rho * rho * std::pow(1.0 - rho, 1.0 - regime.alpha);
    }
    return rho;
}

double friction_reynolds(double re) {
    double alpha = alpha_of_re(re); // rejects Re <= 1
    double c = c_of_alpha(alpha);
    // Re = c 2^(1-alpha) / ((alpha+1)(alpha+2)) W^(1+alpha), solved in logs.
    double ln_coef = std::log(c) + (1.0 - alpha) * std::log(2.0) -
                     std::log((alpha + 1.0) * (alpha + 2.0));
    return std::exp((std::log(re) - ln_coef) / (1.0 + alpha));
}

} // namespace thermx
