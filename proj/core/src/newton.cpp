#include "thermx/newton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "thermx/flow.hpp"
#include "discretization.hpp"

namespace thermx {
namespace detail {

namespace {

// exp with a clamped argument so that diverging iterates produce huge but
// finite residuals instead of inf/nan
double source_exp(double u) { return std::exp(std::min(u, 500.0)); }

} // namespace

Discretization::Discretization(const PipeProblem& problem,
                               std::vector<double> nodes)
    : rho(std::move(nodes)) {
    const size_t n = rho.size();
    lambda2 = problem.lambda * problem.lambda;
    axial.resize(n);
    for (size_t i = 0; i < n; ++i) {
        axial[i] = axial_coefficient(problem.regime, rho[i]);
    }

    trans.resize(n - 1);
    if (problem.regime.is_turbulent()) {
        // Integrated transmissibility: T = rho_f^2 * alpha /
        // ((1-rho_i)^alpha - (1-rho_{i+1})^alpha). Reduces to the midpoint
        // coefficient over Δrho where the coefficient is smooth and captures
        // the (1-rho)^(1-alpha) wall degeneracy exactly on the last face.
        double alpha = problem.regime.alpha;
        for (size_t i = 0; i + 1 < n; ++i) {
            double rf = 0.5 * (rho[i] + rho[i + 1]);
            double denom = std::pow(1.0 - rho[i], alpha) -
                           std::pow(1.0 - rho[i + 1], alpha);
            trans[i] = rf * rf * alpha / denom;
        }
    } else {
        for (size_t i = 0; i + 1 < n; ++i) {
            double rf = 0.5 * (rho[i] + rho[i + 1]);
            trans[i] = rf / (rho[i + 1] - rho[i]);
        }
    }

    inv_vol.resize(n - 1);
    double face_lo = 0.0; // axis
    for (size_t i = 0; i + 1 < n; ++i) {
        double face_hi = 0.5 * (rho[i] + rho[i + 1]);
        inv_vol[i] = 2.0 / (face_hi * face_hi - face_lo * face_lo);
        face_lo = face_hi;
    }
}

void Discretization::residual(std::span<const double> u,
                              std::span<const double> u_prev, double dz,
                              std::span<double> r) const {
    const size_t n = rho.size();
    double flux_lo = 0.0; // zero influx at the axis
    for (size_t i = 0; i + 1 < n; ++i) {
        double flux_hi = trans[i] * (u[i + 1] - u[i]);
        r[i] = axial[i] * (u[i] - u_prev[i]) / dz -
               inv_vol[i] * (flux_hi - flux_lo) - lambda2 * source_exp(u[i]);
        flux_lo = flux_hi;
    }
    r[n - 1] = u[n - 1]; // wall Dirichlet identity
}

double Discretization::residual_norm(std::span<const double> u,
                                     std::span<const double> u_prev, double dz,
                                     std::span<double> scratch) const {
    residual(u, u_prev, dz, scratch);
    double m = 0.0;
    for (double v : scratch) m = std::max(m, std::abs(v));
    return m;
}

double Discretization::row_scale(std::span<const double> u,
                                 std::span<const double> u_prev,
                                 double dz) const {
    const size_t n = rho.size();
    double m = 0.0;
    for (size_t i = 0; i + 1 < n; ++i) {
        double t_hi = trans[i] * (std::abs(u[i + 1]) + std::abs(u[i]));
        double t_lo = i == 0 ? 0.0
                             : trans[i - 1] * (std::abs(u[i]) + std::abs(u[i - 1]));
        double s = axial[i] * (std::abs(u[i]) + std::abs(u_prev[i])) / dz +
                   inv_vol[i] * (t_hi + t_lo) + lambda2 * source_exp(u[i]);
        m = std::max(m, s);
    }
    return m;
}

LayerResult solve_layer(const Discretization& disc, double dz,
                        std::span<const double> u_prev, std::span<double> u,
                        const NewtonOptions& opts) {
    const size_t n = disc.n();
    std::vector<double> r(n), diag(n), sub(n), sup(n), delta(n), trial(n),
        scratch(n);

    u[n - 1] = 0.0;
    LayerResult out;
    double rn = disc.residual_norm(u, u_prev, dz, r);
    double rn_prev = rn;

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        // the roundoff floor of the residual evaluation; on fine grids it can
        // sit above the nominal tolerance and must count as converged
        double floor = 4.0 * std::numeric_limits<double>::epsilon() *
                       disc.row_scale(u, u_prev, dz);
        if (rn < std::max(opts.tol, floor)) {
            out.converged = true;
            out.iterations = iter;
            out.final_residual = rn;
            out.penultimate_residual = rn_prev;
            out.u_max = *std::max_element(u.begin(), u.end());
            return out;
        }

        // tridiagonal Jacobian of the residual
        disc.residual(u, u_prev, dz, r);
        for (size_t i = 0; i + 1 < n; ++i) {
            double t_hi = disc.trans[i];
            double t_lo = i == 0 ? 0.0 : disc.trans[i - 1];
            diag[i] = disc.axial[i] / dz + disc.inv_vol[i] * (t_hi + t_lo) -
                      disc.lambda2 * source_exp(u[i]);
            sup[i] = -disc.inv_vol[i] * t_hi;
            sub[i] = i == 0 ? 0.0 : -disc.inv_vol[i] * t_lo;
        }
        diag[n - 1] = 1.0;
        sub[n - 1] = 0.0;
        sup[n - 1] = 0.0;

        // Thomas factorization, delta = -J^{-1} r
        {
            double piv = diag[0];
            delta[0] = -r[0] / piv;
            for (size_t i = 1; i < n; ++i) {
                // reuse sup[] as the eliminated upper coefficients
                sup[i - 1] /= piv;
                piv = diag[i] - sub[i] * sup[i - 1];
                delta[i] = (-r[i] - sub[i] * delta[i - 1]) / piv;
            }
            for (size_t i = n - 1; i-- > 0;) {
                delta[i] -= sup[i] * delta[i + 1];
            }
        }

        double step = 1.0;
        bool accepted = false;
        for (int h = 0; h <= opts.max_halvings; ++h) {
            for (size_t i = 0; i < n; ++i) trial[i] = u[i] + step * delta[i];
            double rn_trial = disc.residual_norm(trial, u_prev, dz, scratch);
            if (rn_trial < rn) {
                std::copy(trial.begin(), trial.end(), u.begin());
                rn_prev = rn;
                rn = rn_trial;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            out.iterations = iter + 1;
            out.final_residual = rn;
            out.penultimate_residual = rn_prev;
            out.u_max = *std::max_element(u.begin(), u.end());
            return out; // NewtonStall
        }
        double umax = *std::max_element(u.begin(), u.end());
        if (umax > opts.u_blow) {
            out.iterations = iter + 1;
            out.u_capped = true;
            out.final_residual = rn;
            out.penultimate_residual = rn_prev;
            out.u_max = umax;
            return out;
        }
    }
    out.iterations = opts.max_iterations;
    out.final_residual = rn;
    out.penultimate_residual = rn_prev;
    out.u_max = *std::max_element(u.begin(), u.end());
    double floor = 4.0 * std::numeric_limits<double>::epsilon() *
                   disc.row_scale(u, u_prev, dz);
    if (rn < std::max(opts.tol, floor)) out.converged = true;
    return out;
}

} // namespace detail

std::vector<double> discretize_residual(const PipeProblem& problem,
                                        const GridSpec& grid, double zeta0,
                                        std::span<const double> u_layer,
                                        std::span<const double> u_prev_layer) {
    grid.validate();
    if (!(zeta0 > 0.0)) {
        throw std::invalid_argument("discretize_residual: zeta0 must be positive");
    }
    detail::Discretization disc(problem, grid.rho_nodes());
    if (u_layer.size() != disc.n() || u_prev_layer.size() != disc.n()) {
        throw std::invalid_argument(
            "discretize_residual: layer size does not match the grid");
    }
    std::vector<double> r(disc.n());
    disc.residual(u_layer, u_prev_layer, grid.dxi() * zeta0, r);
    return r;
}

SolveOutcome newton_solve(const PipeProblem& problem, const GridSpec& grid,
                          double zeta0, const Field2D* warm_start,
                          const NewtonOptions& opts) {
    grid.validate();
    if (!(zeta0 > 0.0) || !std::isfinite(zeta0)) {
        throw std::invalid_argument("newton_solve: zeta0 must be positive");
    }
    if (warm_start && warm_start->grid.n_rho != grid.n_rho) {
        throw std::invalid_argument(
            "newton_solve: warm start field has a different radial grid");
    }

    Field2D field(grid, problem, zeta0);
    detail::Discretization disc(problem, field.rho);
    const double dz = grid.dxi() * zeta0;

    Converged conv;
    conv.newton_iters_per_layer.reserve(static_cast<size_t>(grid.n_xi));
    double u_max_seen = field.u_max();

    for (int j = 1; j <= grid.n_xi; ++j) {
        auto u = field.layer(j);
        auto u_prev = field.layer(j - 1);
        if (warm_start) {
            int jj = j;
            if (warm_start->grid.n_xi != grid.n_xi) {
                jj = static_cast<int>(
                    static_cast<long long>(j) * warm_start->grid.n_xi / grid.n_xi);
            }
            auto src = warm_start->layer(jj);
            std::copy(src.begin(), src.end(), u.begin());
        } else {
            std::copy(u_prev.begin(), u_prev.end(), u.begin());
        }

        auto layer = detail::solve_layer(disc, dz, u_prev, u, opts);
        u_max_seen = std::max(u_max_seen, layer.u_max);
        if (!layer.converged) {
            return Diverged{j - 1,
                            layer.u_capped ? FailureKind::UmaxExceeded
                                           : FailureKind::NewtonStall,
                            u_max_seen};
        }
        conv.newton_iters_per_layer.push_back(layer.iterations);
        conv.final_residuals.push_back(layer.final_residual);
        conv.penultimate_residuals.push_back(layer.penultimate_residual);
        conv.residual_norm = std::max(conv.residual_norm, layer.final_residual);
    }
    conv.field = std::move(field);
    return conv;
}

} // namespace thermx
