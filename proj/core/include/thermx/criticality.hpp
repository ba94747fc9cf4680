#ifndef THERMX_CRITICALITY_HPP
#define THERMX_CRITICALITY_HPP

#include <string>
#include <variant>
#include <vector>

#include "thermx/newton.hpp"
#include "thermx/steady.hpp"

namespace thermx {

/// One point on the existence boundary: the largest axial length for which
/// the fixed-domain solve still converges, with its bracket.
struct ExistencePoint {
    double lambda = 0.0;
    double zeta0 = 0.0;    // midpoint of the final bracket
    double zeta0_lo = 0.0; // convergent
    double zeta0_hi = 0.0; // divergent
    GridSpec grid;
    FlowRegime regime;
};

struct Unbounded {
    double zeta_cap = 0.0; // convergence held up to this operational cap
};

using Zeta0Result = std::variant<ExistencePoint, Unbounded>;

struct Zeta0Options {
    double rel_tol = 1e-3;   // bracket width target, (1e-4, 0.1]
    double zeta_start = 1e-4;
    double zeta_cap = 1e3;   // operational stand-in for "exists for all zeta"
    /// A failure whose last good layer is beyond 90% of n_xi is retried once
    /// with doubled axial resolution before it is accepted as divergent.
    bool escalate_near_boundary = true;
    const Field2D* warm = nullptr; // optional neighbor warm start
    NewtonOptions newton;
};

/// Doubles zeta0 from zeta_start with warm starts while the solver
/// converges, then bisects the first convergent/divergent bracket down to
/// rel_tol. Returns Unbounded when the cap is reached convergent. Throws
/// TooSupercriticalError when even zeta_start fails. When last_convergent is
/// non-null it receives the final convergent field (for warm-start chains).
Zeta0Result find_zeta0(const PipeProblem& problem, const GridSpec& grid,
                       const Zeta0Options& opts = {},
                       Field2D* last_convergent = nullptr);

/// Existence boundary over a set of lambdas.
struct BoundaryCurve {
    std::vector<ExistencePoint> points; // ascending lambda
    FlowRegime regime;
    GridSpec grid;
    double rel_tol = 0.0;
    std::string label;
    /// Per-lambda notes for points that produced no ExistencePoint
    /// (unbounded or too supercritical); the sweep never aborts.
    std::vector<std::string> diagnostics;
};

struct SweepOptions {
    int jobs = 1; // >1 computes points concurrently (no neighbor warm starts)
    Zeta0Options zeta0;
    std::string label;
};

/// Computes one ExistencePoint per lambda (ascending). With jobs == 1 each
/// point warm-starts from its left neighbor's last convergent field.
BoundaryCurve sweep_boundary(const FlowRegime& regime,
                             const std::vector<double>& lambdas,
                             const GridSpec& grid,
                             const SweepOptions& opts = {});

struct CriticalityComparison {
    double lambda_cr_pde = 0.0;
    double lambda_cr_steady = 0.0;
    double rel_gap = 0.0;
};

struct ConsistencyOptions {
    double lambda_rel_tol = 1e-3; // bisection width in lambda
    Zeta0Options zeta0;
    EnvelopeOptions envelope;
};

/// Locates the critical lambda from the grid side — the crossover between
/// "convergent for all tested lengths" and "bounded existence" — and
/// compares it against the steady envelope value.
/// Throws DiagnosticError when the convergence pattern in lambda is not
/// monotone.
CriticalityComparison lambda_cr_consistency(const FlowRegime& regime,
                                            const GridSpec& grid,
                                            const ConsistencyOptions& opts = {});

} // namespace thermx

#endif // THERMX_CRITICALITY_HPP
