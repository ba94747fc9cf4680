#ifndef THERMX_STEADY_HPP
#define THERMX_STEADY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "thermx/flow.hpp"

namespace thermx {

enum class Branch { Lower, Upper };

/// Radial excess-temperature distribution far downstream, where the axial
/// variation has died out. u is maximal on the axis, strictly decreasing in
/// rho, and zero at the wall after branch solving.
struct SteadyProfile {
    std::vector<double> rho_nodes;   // ascending, rho_nodes.front() == 0
    std::vector<double> u_values;
    std::vector<double> flux_values; // a(rho) du/drho at the nodes (<= 0)
    double lambda = 0.0;
    FlowRegime regime;
    Branch branch = Branch::Lower;

    double u_axis() const { return u_values.front(); }
    double u_wall() const { return u_values.back(); }

    /// Linear interpolation between stored nodes.
    double u_at(double rho) const;
};

struct ShootOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    double rho_start = 1e-8;   // axis offset for the series start
    double wall_delta = 1e-6;  // turbulent: integration stops at 1 - delta
    int profile_nodes = 2049;  // node count of the returned profile
};

struct ShootResult {
    double u_wall = 0.0;   // u(1) with the wall condition NOT imposed
    SteadyProfile profile;
};

/// Integrates the steady radial problem from the axis value u0 out to the
/// wall and reports u(1). The axis is entered through a regular series; the
/// turbulent wall singularity (du/drho ~ (1-rho)^(alpha-1)) is handled by
/// stopping at 1 - wall_delta and adding the leading-order flux correction
/// F * delta^alpha / alpha.
/// Throws StiffnessError if the integrator step size underflows.
ShootResult shoot_steady(const FlowRegime& regime, double lambda, double u0,
                         const ShootOptions& opts = {});

struct SteadyOptions {
    Branch branch = Branch::Lower;
    double u0_tol = 1e-10;       // bisection tolerance in the axis value
    double critical_band = 1e-7; // |max u_wall| below this => at criticality
    ShootOptions shoot;
};

/// Solves for the steady profile with u(1) = 0 at the given lambda.
/// Returns the requested branch (lower = physically stable by default), or
/// std::nullopt when lambda exceeds the critical value and no steady
/// solution exists. Throws AtCriticalityError when lambda is so close to
/// critical that the two roots cannot be separated.
std::optional<SteadyProfile> solve_steady(const FlowRegime& regime, double lambda,
                                          const SteadyOptions& opts = {});

/// Critical pipe-radius parameter obtained from the one-parameter family of
/// steady integral curves (parameter u(0)): lambda(u0) is the unique value
/// satisfying the wall condition, and the critical lambda is the maximum of
/// that curve — the envelope touch.
struct EnvelopeResult {
    double lambda_cr = 0.0;
    double u0_at_cr = 0.0;
    std::vector<std::pair<double, double>> curve; // sampled (u0, lambda(u0))
};

struct EnvelopeOptions {
    double u0_min = 0.1;
    double u0_max = 10.0;
    int scan_points = 64;     // log-spaced coarse scan
    double u0_tol = 1e-6;     // golden-section refinement tolerance
    double lambda_tol = 1e-9; // per-point root tolerance in lambda
    int max_widenings = 6;    // automatic range widening when the max sits
                              // on a scan boundary
    ShootOptions shoot;
};

/// Throws DiagnosticError when the sampled lambda(u0) curve is not unimodal
/// (an integrator failure, not a property of the problem).
EnvelopeResult critical_lambda(const FlowRegime& regime,
                               const EnvelopeOptions& opts = {});

} // namespace thermx

#endif // THERMX_STEADY_HPP
