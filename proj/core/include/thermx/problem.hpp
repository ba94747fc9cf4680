#ifndef THERMX_PROBLEM_HPP
#define THERMX_PROBLEM_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

#include "thermx/flow.hpp"

namespace thermx {

/// Dimensionless problem instance: pipe-radius parameter lambda, flow
/// regime, and the inlet excess-temperature profile (zero by default).
/// Immutable after construction; safe to share between threads.
struct PipeProblem {
    double lambda = 0.0;
    FlowRegime regime;
    std::function<double(double)> inlet; // u0(rho); empty means identically 0

    PipeProblem() = default;

    PipeProblem(double lambda_, FlowRegime regime_,
                std::function<double(double)> inlet_ = {})
        : lambda(lambda_), regime(regime_), inlet(std::move(inlet_)) {
        if (!(lambda > 0.0) || !std::isfinite(lambda)) {
            throw std::invalid_argument("PipeProblem: lambda must be finite and positive");
        }
        if (inlet && std::abs(inlet(1.0)) > 1e-12) {
            throw std::invalid_argument(
                "PipeProblem: inlet profile must vanish at the wall (u0(1) = 0)");
        }
    }

    double inlet_value(double rho) const { return inlet ? inlet(rho) : 0.0; }
};

} // namespace thermx

#endif // THERMX_PROBLEM_HPP
