#include "thermx/march.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "discretization.hpp"

namespace thermx {

MarchResult march_oracle(const PipeProblem& problem, int n_rho, double zeta_max,
                         const MarchOptions& opts) {
    if (!(zeta_max > 0.0)) {
        throw std::invalid_argument("march_oracle: zeta_max must be positive");
    }
    GridSpec grid = GridSpec::for_regime(problem.regime, n_rho, 32);
    std::vector<double> rho = grid.rho_nodes();
    detail::Discretization disc(problem, rho);

    std::vector<double> u_prev(rho.size()), u(rho.size());
    for (size_t i = 0; i < rho.size(); ++i) {
        u_prev[i] = problem.inlet_value(rho[i]);
    }
    u_prev.back() = 0.0;
    double u_max = *std::max_element(u_prev.begin(), u_prev.end());

    double zeta = 0.0;
    double dz = opts.dz_init;
    while (zeta < zeta_max) {
        double step = std::min(dz, zeta_max - zeta);
        std::copy(u_prev.begin(), u_prev.end(), u.begin());
        auto layer = detail::solve_layer(disc, step, u_prev, u, opts.newton);
        if (layer.converged) {
            zeta += step;
            std::swap(u, u_prev);
            u_max = std::max(u_max, layer.u_max);
            if (opts.on_step) opts.on_step(zeta, layer.u_max);
            dz = std::min(dz * opts.growth,
                          std::max(opts.dz_init, opts.rel_cap * zeta));
        } else {
            dz *= 0.5;
            if (dz < opts.dz_min) {
                return BlowUp{zeta};
            }
        }
    }
    return NoBlowUp{zeta, u_max};
}

} // namespace thermx
