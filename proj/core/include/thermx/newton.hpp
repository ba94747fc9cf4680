#ifndef THERMX_NEWTON_HPP
#define THERMX_NEWTON_HPP

#include <span>
#include <variant>
#include <vector>

#include "thermx/grid.hpp"
#include "thermx/problem.hpp"

namespace thermx {

struct NewtonOptions {
    double tol = 1e-10;      // residual infinity-norm target per layer
    int max_iterations = 50; // per layer
    int max_halvings = 8;    // step halvings within one iteration
    double u_blow = 30.0;    // any iterate above this aborts the solve
};

enum class FailureKind { NewtonStall, UmaxExceeded };

struct Converged {
    Field2D field;
    std::vector<int> newton_iters_per_layer;
    double residual_norm = 0.0; // worst final layer residual
    // final and penultimate residual norms per layer, for convergence-rate
    // diagnostics
    std::vector<double> final_residuals;
    std::vector<double> penultimate_residuals;
};

struct Diverged {
    int last_good_layer = 0;
    FailureKind failure = FailureKind::NewtonStall;
    double u_max_reached = 0.0;
};

using SolveOutcome = std::variant<Converged, Diverged>;

/// Finite-volume residual of one axial layer given the previous one. Nodes
/// follow grid.rho_nodes(); the axis cell carries zero inner flux, the wall
/// node the Dirichlet identity u = 0. For turbulent flow the face fluxes use
/// transmissibilities integrated across the degenerate wall coefficient, so
/// the singular wall layer is captured on coarse cells.
std::vector<double> discretize_residual(const PipeProblem& problem,
                                        const GridSpec& grid, double zeta0,
                                        std::span<const double> u_layer,
                                        std::span<const double> u_prev_layer);

/// Marches the rescaled problem layer by layer with a damped Newton
/// iteration and an analytic tridiagonal Jacobian. The axial coupling is
/// one-directional, so per-layer solves are exactly the block solves of the
/// global Newton system. A warm start copies iterates layer-for-layer from
/// the supplied field (layer indices are scaled if its n_xi differs).
/// Divergence is an outcome, not an error.
SolveOutcome newton_solve(const PipeProblem& problem, const GridSpec& grid,
                          double zeta0, const Field2D* warm_start = nullptr,
                          const NewtonOptions& opts = {});

} // namespace thermx

#endif // THERMX_NEWTON_HPP
