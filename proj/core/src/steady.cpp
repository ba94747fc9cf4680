#include "thermx/steady.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "thermx/errors.hpp"
#include "thermx/rootfind.hpp"

namespace odeint = boost::numeric::odeint;

namespace thermx {

double SteadyProfile::u_at(double rho) const {
    if (rho_nodes.empty()) throw std::logic_error("SteadyProfile: empty profile");
    if (rho <= rho_nodes.front()) return u_values.front();
    if (rho >= rho_nodes.back()) return u_values.back();
    auto it = std::upper_bound(rho_nodes.begin(), rho_nodes.end(), rho);
    size_t i = static_cast<size_t>(it - rho_nodes.begin());
    double t = (rho - rho_nodes[i - 1]) / (rho_nodes[i] - rho_nodes[i - 1]);
    return (1.0 - t) * u_values[i - 1] + t * u_values[i];
}

namespace {

using State = std::array<double, 2>; // {u, flux a(rho) du/drho}

// d/drho in the bulk; valid away from the degenerate endpoints
struct RadialRhs {
    double lambda2;
    double alpha;
    bool turbulent;

    void operator()(const State& y, State& dy, double rho) const {
        double a = turbulent ? rho * rho * std::pow(1.0 - rho, 1.0 - alpha) : rho;
        dy[0] = y[1] / a;
        dy[1] = -lambda2 * rho * std::exp(y[0]);
    }
};

// turbulent wall layer in tau = -ln(1 - rho); removes the (1-rho)^(alpha-1)
// blow-up of du/drho so the controller keeps ordinary step sizes
struct WallRhs {
    double lambda2;
    double alpha;

    void operator()(const State& y, State& dy, double tau) const {
        double om = std::exp(-tau); // 1 - rho
        double rho = 1.0 - om;
        dy[0] = y[1] * std::exp(-alpha * tau) / (rho * rho);
        dy[1] = -lambda2 * rho * std::exp(y[0]) * om;
    }
};

constexpr int kMaxSteps = 4'000'000;

template <class Sys>
void integrate_fast(const Sys& sys, State& y, double t0, double t1,
                    double abs_tol, double rel_tol) {
    double span = t1 - t0;
    if (!(span > 0.0)) return;
    // the max_dt cap keeps the controller from growing the step without
    // bound on near-constant stretches, which ends in 0 * inf
    auto ctrl = odeint::make_controlled(abs_tol, rel_tol, span / 8.0,
                                        odeint::runge_kutta_dopri5<State>());
    double t = t0;
    double dt = span * 1e-3;
    const double min_dt = std::max(span * 1e-15, 1e-18);
    for (int steps = 0; t < t1; ++steps) {
        if (steps > kMaxSteps) {
            throw StiffnessError("steady integration exceeded the step budget", t);
        }
        if (t + dt > t1) dt = t1 - t;
        if (odeint::fail == ctrl.try_step(sys, y, t, dt)) {
            if (dt < min_dt) {
                throw StiffnessError("steady integration step size underflow", t);
            }
        }
    }
}

// Integrates while emitting interpolated states at the requested ascending
// output abscissae (all inside [t0, t1]).
template <class Sys, class Emit>
void integrate_dense(const Sys& sys, State& y, double t0, double t1,
                     double abs_tol, double rel_tol,
                     const std::vector<double>& out_ts, Emit emit) {
    double span = t1 - t0;
    if (!(span > 0.0)) return;
    auto stepper = odeint::make_dense_output(abs_tol, rel_tol, span / 8.0,
                                             odeint::runge_kutta_dopri5<State>());
    stepper.initialize(y, t0, span * 1e-3);
    const double min_dt = std::max(span * 1e-15, 1e-18);
    size_t k = 0;
    while (k < out_ts.size() && out_ts[k] <= t0) {
        State tmp = y;
        emit(out_ts[k], tmp);
        ++k;
    }
    int steps = 0;
    const double t_end = t1 - 1e-14 * span;
    while (stepper.current_time() < t_end) {
        if (++steps > kMaxSteps) {
            throw StiffnessError("steady integration exceeded the step budget",
                                 stepper.current_time());
        }
        // never step past t1: the equations are undefined beyond the wall
        if (stepper.current_time() + stepper.current_time_step() > t1) {
            stepper.initialize(stepper.current_state(), stepper.current_time(),
                               t1 - stepper.current_time());
        }
        auto interval = stepper.do_step(sys);
        if (!(interval.second - interval.first > min_dt)) {
            throw StiffnessError("steady integration step size underflow",
                                 interval.first);
        }
        double reach = std::min(stepper.current_time(), t1);
        while (k < out_ts.size() && out_ts[k] <= reach) {
            State tmp;
            stepper.calc_state(out_ts[k], tmp);
            emit(out_ts[k], tmp);
            ++k;
        }
    }
    State yf;
    stepper.calc_state(t1, yf);
    while (k < out_ts.size() && out_ts[k] <= t1) {
        State tmp;
        stepper.calc_state(out_ts[k], tmp);
        emit(out_ts[k], tmp);
        ++k;
    }
    y = yf;
}

State axis_series_state(double lambda, double u0, double rho_s, bool turbulent) {
    double s = lambda * lambda * std::exp(u0);
    State y;
    y[1] = -0.5 * s * rho_s * rho_s;
    y[0] = turbulent ? u0 - 0.5 * s * rho_s : u0 - 0.25 * s * rho_s * rho_s;
    return y;
}

double wall_tail_correction(double flux_end, double delta, double alpha) {
    return flux_end * std::pow(delta, alpha) / alpha;
}

// u(1) only; the workhorse of the branch and envelope searches
double wall_value_raw(const FlowRegime& regime, double lambda, double u0,
                      const ShootOptions& opts) {
    double lambda2 = lambda * lambda;
    State y = axis_series_state(lambda, u0, opts.rho_start, regime.is_turbulent());
    if (regime.is_turbulent()) {
        RadialRhs bulk{lambda2, regime.alpha, true};
        double rho_x = 0.9;
        integrate_fast(bulk, y, opts.rho_start, rho_x, opts.abs_tol, opts.rel_tol);
        WallRhs wall{lambda2, regime.alpha};
        double tau_x = -std::log(1.0 - rho_x);
        double tau_e = -std::log(opts.wall_delta);
        integrate_fast(wall, y, tau_x, tau_e, opts.abs_tol, opts.rel_tol);
        return y[0] + wall_tail_correction(y[1], opts.wall_delta, regime.alpha);
    }
    RadialRhs bulk{lambda2, 0.0, false};
    integrate_fast(bulk, y, opts.rho_start, 1.0, opts.abs_tol, opts.rel_tol);
    return y[0];
}

// The wall value dives without bound once lambda or u0 is deeply
// supercritical and can overflow; for root/extremum searches any non-finite
// outcome behaves like "far below zero".
double wall_value(const FlowRegime& regime, double lambda, double u0,
                  const ShootOptions& opts) {
    double v;
    try {
        v = wall_value_raw(regime, lambda, u0, opts);
    } catch (const StiffnessError&) {
        return -1e300;
    }
    return std::isfinite(v) ? v : -1e300;
}

} // namespace

ShootResult shoot_steady(const FlowRegime& regime, double lambda, double u0,
                         const ShootOptions& opts) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("shoot_steady: lambda must be positive");
    }
    if (!(u0 >= 0.0)) {
        throw std::invalid_argument("shoot_steady: u0 must be nonnegative");
    }
    int n = std::max(opts.profile_nodes, 17);
    double lambda2 = lambda * lambda;

    SteadyProfile prof;
    prof.lambda = lambda;
    prof.regime = regime;
    prof.rho_nodes.push_back(0.0);
    prof.u_values.push_back(u0);
    prof.flux_values.push_back(0.0);

    State y = axis_series_state(lambda, u0, opts.rho_start, regime.is_turbulent());
    auto emit_rho = [&](double rho, const State& s) {
        prof.rho_nodes.push_back(rho);
        prof.u_values.push_back(s[0]);
        prof.flux_values.push_back(s[1]);
    };

    if (regime.is_turbulent()) {
        // bulk up to 0.9, then a log-spaced wall layer down to 1 - delta
        double rho_x = 0.9;
        int n_bulk = (3 * n) / 4;
        int n_wall = n - n_bulk - 1;
        std::vector<double> ts;
        ts.reserve(n_bulk);
        for (int i = 1; i <= n_bulk; ++i) {
            ts.push_back(rho_x * static_cast<double>(i) / n_bulk);
        }
        RadialRhs bulk{lambda2, regime.alpha, true};
        integrate_dense(bulk, y, opts.rho_start, rho_x, opts.abs_tol,
                        opts.rel_tol, ts, emit_rho);

        double tau_x = -std::log(1.0 - rho_x);
        double tau_e = -std::log(opts.wall_delta);
        std::vector<double> taus;
        taus.reserve(n_wall);
        for (int j = 1; j <= n_wall; ++j) {
            taus.push_back(tau_x + (tau_e - tau_x) * static_cast<double>(j) / n_wall);
        }
        WallRhs wall{lambda2, regime.alpha};
        auto emit_tau = [&](double tau, const State& s) {
            emit_rho(1.0 - std::exp(-tau), s);
        };
        integrate_dense(wall, y, tau_x, tau_e, opts.abs_tol, opts.rel_tol, taus,
                        emit_tau);

        double u_wall = y[0] + wall_tail_correction(y[1], opts.wall_delta,
                                                    regime.alpha);
        prof.rho_nodes.push_back(1.0);
        prof.u_values.push_back(u_wall);
        prof.flux_values.push_back(y[1]);
        return {u_wall, std::move(prof)};
    }

    std::vector<double> ts;
    ts.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        ts.push_back(static_cast<double>(i) / (n - 1));
    }
    RadialRhs bulk{lambda2, 0.0, false};
    integrate_dense(bulk, y, opts.rho_start, 1.0, opts.abs_tol, opts.rel_tol, ts,
                    emit_rho);
    double u_wall = prof.u_values.back();
    return {u_wall, std::move(prof)};
}

namespace {

struct ScanPoint {
    double u0;
    double w; // u(1) for that axis value
};

} // namespace

std::optional<SteadyProfile> solve_steady(const FlowRegime& regime, double lambda,
                                          const SteadyOptions& opts) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("solve_steady: lambda must be positive");
    }
    auto w = [&](double u0) { return wall_value(regime, lambda, u0, opts.shoot); };

    // geometric scan in the axis value; w rises from w(0) < 0 to a single
    // peak and then falls without bound
    std::vector<ScanPoint> scan;
    scan.push_back({0.0, w(0.0)});
    size_t argmax = 0;
    {
        double u0 = 0.05;
        for (int k = 0; k < 48; ++k) {
            scan.push_back({u0, w(u0)});
            if (scan.back().w > scan[argmax].w) argmax = scan.size() - 1;
            bool past_peak =
                scan.size() - 1 > argmax &&
                scan.back().w <
                    scan[argmax].w - std::max(1.0, std::abs(scan[argmax].w));
            if (past_peak && scan[argmax].w > 0.0) break;
            if (past_peak && scan.size() - 1 - argmax >= 2) break;
            u0 *= 2.0;
        }
    }

    auto refine_root = [&](double lo, double hi) {
        double xtol = opts.u0_tol * std::max(1.0, hi);
        return find_root(w, lo, hi, xtol).x;
    };

    double root_u0 = std::numeric_limits<double>::quiet_NaN();
    size_t first_pos = scan.size();
    for (size_t i = 0; i < scan.size(); ++i) {
        if (scan[i].w > 0.0) {
            first_pos = i;
            break;
        }
    }

    if (first_pos < scan.size()) {
        if (opts.branch == Branch::Lower) {
            root_u0 = refine_root(scan[first_pos - 1].u0, scan[first_pos].u0);
        } else {
            // walk right until the wall value turns negative again
            size_t q = first_pos;
            while (q + 1 < scan.size() && scan[q + 1].w > 0.0) ++q;
            if (q + 1 < scan.size()) {
                root_u0 = refine_root(scan[q].u0, scan[q + 1].u0);
            } else {
                double lo = scan[q].u0, hi = lo * 2.0;
                while (w(hi) > 0.0) {
                    lo = hi;
                    hi *= 2.0;
                    if (hi > 1e12) {
                        throw DiagnosticError(
                            "solve_steady: upper branch bracket not found");
                    }
                }
                root_u0 = refine_root(lo, hi);
            }
        }
    } else {
        // no positive sample: the peak either hides between scan points or
        // the problem is supercritical
        if (argmax == 0 || argmax + 1 >= scan.size()) {
            return std::nullopt; // peak at the scan edge: deeply supercritical
        }
        auto peak = find_maximum(w, scan[argmax - 1].u0, scan[argmax + 1].u0,
                                 opts.u0_tol * std::max(1.0, scan[argmax + 1].u0));
        if (peak.value > opts.critical_band) {
            double lo = scan[argmax - 1].u0;
            root_u0 = (opts.branch == Branch::Lower)
                          ? refine_root(lo, peak.x)
                          : refine_root(peak.x, scan[argmax + 1].u0);
        } else if (peak.value > -opts.critical_band) {
            throw AtCriticalityError(
                "solve_steady: lambda is inside the criticality tolerance band; "
                "wall-condition roots cannot be separated",
                scan[argmax - 1].u0, scan[argmax + 1].u0);
        } else {
            return std::nullopt;
        }
    }

    ShootResult shot = shoot_steady(regime, lambda, root_u0, opts.shoot);
    shot.profile.branch = opts.branch;
    shot.profile.u_values.back() = 0.0; // wall condition holds by construction
    return std::move(shot.profile);
}

namespace {

double lambda_of_u0(const FlowRegime& regime, double u0, double lambda_tol,
                    const ShootOptions& shoot) {
    auto g = [&](double lam) { return wall_value(regime, lam, u0, shoot); };
    double lo = 1e-8;
    double hi = 1.0;
    double ghi = g(hi);
    while (ghi > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e8) {
            throw DiagnosticError(
                "critical_lambda: wall value never turns negative in lambda");
        }
        ghi = g(hi);
    }
    return find_root(g, lo, hi, lambda_tol).x;
}

} // namespace

EnvelopeResult critical_lambda(const FlowRegime& regime,
                               const EnvelopeOptions& opts) {
    double u0_min = opts.u0_min;
    double u0_max = opts.u0_max;
    int n = std::max(opts.scan_points, 8);

    for (int widen = 0; widen <= opts.max_widenings; ++widen) {
        std::vector<std::pair<double, double>> curve(n);
        double log_lo = std::log(u0_min), log_hi = std::log(u0_max);
        for (int i = 0; i < n; ++i) {
            double u0 = std::exp(log_lo + (log_hi - log_lo) * i / (n - 1));
            curve[i] = {u0, lambda_of_u0(regime, u0, opts.lambda_tol, opts.shoot)};
        }
        size_t k = 0;
        for (size_t i = 1; i < curve.size(); ++i) {
            if (curve[i].second > curve[k].second) k = i;
        }
        if (k == 0) {
            u0_min /= 10.0;
            continue;
        }
        if (k + 1 == curve.size()) {
            u0_max *= 10.0;
            continue;
        }

        // The curve must rise cleanly to the principal fold. Beyond it the
        // tail may carry damped oscillations (classical multiplicity
        // structure), but none may top the fold itself.
        double tol = std::max(1e-8, 1e-7 * curve[k].second);
        for (size_t i = 0; i + 1 <= k; ++i) {
            if (curve[i + 1].second - curve[i].second < -tol) {
                throw DiagnosticError(
                    "critical_lambda: lambda(u0) is not monotone below its "
                    "maximum; integrator failure suspected");
            }
        }
        for (size_t i = k + 2; i < curve.size(); ++i) {
            if (curve[i].second > curve[k].second + tol) {
                throw DiagnosticError(
                    "critical_lambda: secondary maximum above the principal "
                    "fold in the sampled lambda(u0) curve");
            }
        }

        auto peak = find_maximum(
            [&](double u0) {
                return lambda_of_u0(regime, u0, opts.lambda_tol, opts.shoot);
            },
            curve[k - 1].first, curve[k + 1].first, opts.u0_tol);

        EnvelopeResult out;
        out.lambda_cr = peak.value;
        out.u0_at_cr = peak.x;
        out.curve = std::move(curve);
        return out;
    }
    throw DiagnosticError(
        "critical_lambda: envelope touch kept landing on the scan boundary");
}

} // namespace thermx
