#ifndef THERMX_SRC_DISCRETIZATION_HPP
#define THERMX_SRC_DISCRETIZATION_HPP

#include <span>
#include <vector>

#include "thermx/newton.hpp"
#include "thermx/problem.hpp"

namespace thermx::detail {

/// Radial finite-volume operator assembled once per (problem, node set):
/// cell volumes against the measure rho drho, face transmissibilities, and
/// the axial coefficient at the nodes. Layer solves share this across the
/// whole axial march.
struct Discretization {
    std::vector<double> rho;
    std::vector<double> axial;   // coefficient of the axial derivative
    std::vector<double> trans;   // face transmissibility between i and i+1
    std::vector<double> inv_vol; // 1 / cell volume, axis..last interior
    double lambda2 = 0.0;

    Discretization(const PipeProblem& problem, std::vector<double> nodes);

    size_t n() const { return rho.size(); }

    /// r_i of the implicit layer equation with axial increment dz.
    void residual(std::span<const double> u, std::span<const double> u_prev,
                  double dz, std::span<double> r) const;

    double residual_norm(std::span<const double> u,
                         std::span<const double> u_prev, double dz,
                         std::span<double> scratch) const;

    /// Largest sum of term magnitudes across the rows; eps times this is
    /// the roundoff floor of the residual, below which "convergence" cannot
    /// be distinguished from noise on fine grids.
    double row_scale(std::span<const double> u, std::span<const double> u_prev,
                     double dz) const;
};

struct LayerResult {
    bool converged = false;
    bool u_capped = false;  // an iterate exceeded the blow-up cap
    int iterations = 0;
    double final_residual = 0.0;
    double penultimate_residual = 0.0;
    double u_max = 0.0; // largest u seen on the final iterate
};

/// Damped Newton solve of one implicit layer; u enters as the initial
/// iterate and leaves as the final one.
LayerResult solve_layer(const Discretization& disc, double dz,
                        std::span<const double> u_prev, std::span<double> u,
                        const NewtonOptions& opts);

} // namespace thermx::detail

#endif // THERMX_SRC_DISCRETIZATION_HPP
