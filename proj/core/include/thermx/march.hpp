#ifndef THERMX_MARCH_HPP
#define THERMX_MARCH_HPP

#include <functional>
#include <variant>

#include "thermx/newton.hpp"
#include "thermx/problem.hpp"

namespace thermx {

struct BlowUp {
    double zeta_b = 0.0; // last resolved axial position
};

struct NoBlowUp {
    double zeta_reached = 0.0;
    double u_max = 0.0;
};

using MarchResult = std::variant<BlowUp, NoBlowUp>;

struct MarchOptions {
    double dz_init = 1e-4;
    double dz_min = 1e-12;  // accepted step below this declares blow-up
    double growth = 1.25;   // step growth after an accepted step
    double rel_cap = 1.0 / 32.0; // dz never exceeds max(dz_init, rel_cap * zeta)
    NewtonOptions newton;
    /// Observer called after every accepted step with (zeta, u_max).
    std::function<void(double, double)> on_step;
};

/// Independent cross-check of the fixed-domain solver: marches the problem
/// in the physical axial coordinate with adaptive implicit steps, halving
/// the step whenever the layer solve fails. Blow-up is declared when the
/// step underflows dz_min or an accepted state exceeds the u cap.
MarchResult march_oracle(const PipeProblem& problem, int n_rho, double zeta_max,
                         const MarchOptions& opts = {});

} // namespace thermx

#endif // THERMX_MARCH_HPP
