#include "thermx/criticality.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "thermx/errors.hpp"

namespace thermx {

namespace {

struct Trial {
    bool converged = false;
    std::optional<Field2D> field; // only when converged
};

// One convergence probe at a given zeta0. Near-boundary failures are
// adjudicated once more at doubled axial resolution; a convergent retry is
// restricted back to the working grid for warm-start continuity.
Trial classify(const PipeProblem& problem, const GridSpec& grid, double zeta0,
               const Field2D* warm, const Zeta0Options& opts) {
    SolveOutcome out = newton_solve(problem, grid, zeta0, warm, opts.newton);
    if (auto* c = std::get_if<Converged>(&out)) {
        return {true, std::move(c->field)};
    }
    const auto& d = std::get<Diverged>(out);
    if (opts.escalate_near_boundary &&
        d.last_good_layer > (9 * grid.n_xi) / 10) {
        GridSpec fine = grid;
        fine.n_xi *= 2;
        SolveOutcome retry = newton_solve(problem, fine, zeta0, warm, opts.newton);
        if (auto* c = std::get_if<Converged>(&retry)) {
            Field2D restricted(grid, problem, zeta0);
            for (int j = 0; j <= grid.n_xi; ++j) {
                auto dst = restricted.layer(j);
                auto src = c->field.layer(2 * j);
                std::copy(src.begin(), src.end(), dst.begin());
            }
            return {true, std::move(restricted)};
        }
    }
    return {false, std::nullopt};
}

} // namespace

Zeta0Result find_zeta0(const PipeProblem& problem, const GridSpec& grid,
                       const Zeta0Options& opts, Field2D* last_convergent) {
    grid.validate();
    if (!(opts.rel_tol > 1e-4 && opts.rel_tol <= 0.1)) {
        throw std::invalid_argument("find_zeta0: rel_tol must lie in (1e-4, 0.1]");
    }
    if (!(opts.zeta_start > 0.0 && opts.zeta_cap > opts.zeta_start)) {
        throw std::invalid_argument("find_zeta0: need 0 < zeta_start < zeta_cap");
    }

    double lo = opts.zeta_start;
    Trial t = classify(problem, grid, lo, opts.warm, opts);
    double hi = 0.0;
    if (!t.converged) {
        // The existence boundary can sit below the starting length for very
        // supercritical lambda; continue the search downward before giving up.
        const double floor = opts.zeta_start * 1e-6;
        hi = lo;
        for (;;) {
            lo *= 0.5;
            if (lo < floor) {
                std::ostringstream msg;
                msg << "find_zeta0: no convergence down to " << 2.0 * lo
                    << " (lambda = " << problem.lambda
                    << "); the parameter is far beyond the tested range or "
                       "the grid is too coarse";
                throw TooSupercriticalError(msg.str());
            }
            t = classify(problem, grid, lo, opts.warm, opts);
            if (t.converged) break;
            hi = lo;
        }
    }
    Field2D good = std::move(*t.field);

    for (; hi == 0.0;) {
        if (lo >= opts.zeta_cap) {
            if (last_convergent) *last_convergent = std::move(good);
            return Unbounded{opts.zeta_cap};
        }
        double next = std::min(lo * 2.0, opts.zeta_cap);
        t = classify(problem, grid, next, &good, opts);
        if (t.converged) {
            lo = next;
            good = std::move(*t.field);
        } else {
            hi = next;
            break;
        }
    }

    while (hi / lo - 1.0 > opts.rel_tol) {
        double mid = 0.5 * (lo + hi);
        t = classify(problem, grid, mid, &good, opts);
        if (t.converged) {
            lo = mid;
            good = std::move(*t.field);
        } else {
            hi = mid;
        }
    }

    if (last_convergent) *last_convergent = std::move(good);
    ExistencePoint p;
    p.lambda = problem.lambda;
    p.zeta0 = 0.5 * (lo + hi);
    p.zeta0_lo = lo;
    p.zeta0_hi = hi;
    p.grid = grid;
    p.regime = problem.regime;
    return p;
}

BoundaryCurve sweep_boundary(const FlowRegime& regime,
                             const std::vector<double>& lambdas,
                             const GridSpec& grid, const SweepOptions& opts) {
    if (!std::is_sorted(lambdas.begin(), lambdas.end())) {
        throw std::invalid_argument("sweep_boundary: lambdas must be ascending");
    }
    BoundaryCurve curve;
    curve.regime = regime;
    curve.grid = grid;
    curve.rel_tol = opts.zeta0.rel_tol;
    curve.label = opts.label;
    if (lambdas.empty()) return curve;

    struct Slot {
        std::optional<ExistencePoint> point;
        std::string note;
    };
    std::vector<Slot> slots(lambdas.size());

    auto run_one = [&](size_t k, const Field2D* warm, Field2D* out_field) {
        PipeProblem problem(lambdas[k], regime);
        Zeta0Options local = opts.zeta0;
        local.warm = warm;
        try {
            Zeta0Result res = find_zeta0(problem, grid, local, out_field);
            if (auto* p = std::get_if<ExistencePoint>(&res)) {
                slots[k].point = *p;
            } else {
                std::ostringstream msg;
                msg << "lambda " << lambdas[k]
                    << ": convergent up to the cap "
                    << std::get<Unbounded>(res).zeta_cap << " (subcritical)";
                slots[k].note = msg.str();
            }
        } catch (const TooSupercriticalError& e) {
            std::ostringstream msg;
            msg << "lambda " << lambdas[k] << ": " << e.what();
            slots[k].note = msg.str();
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        Field2D carry;
        bool have_carry = false;
        for (size_t k = 0; k < lambdas.size(); ++k) {
            Field2D next;
            run_one(k, have_carry ? &carry : nullptr, &next);
            if (!next.u.empty()) {
                carry = std::move(next);
                have_carry = true;
            }
        }
    } else {
        std::atomic<size_t> cursor{0};
        auto worker = [&] {
            for (;;) {
                size_t k = cursor.fetch_add(1);
                if (k >= lambdas.size()) return;
                run_one(k, nullptr, nullptr);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& s : slots) {
        if (s.point) {
            curve.points.push_back(std::move(*s.point));
        } else {
            curve.diagnostics.push_back(std::move(s.note));
        }
    }
    return curve;
}

CriticalityComparison lambda_cr_consistency(const FlowRegime& regime,
                                            const GridSpec& grid,
                                            const ConsistencyOptions& opts) {
    EnvelopeResult env = critical_lambda(regime, opts.envelope);
    double steady = env.lambda_cr;

    auto bounded = [&](double lambda) {
        PipeProblem problem(lambda, regime);
        try {
            Zeta0Result res = find_zeta0(problem, grid, opts.zeta0);
            return std::holds_alternative<ExistencePoint>(res);
        } catch (const TooSupercriticalError&) {
            return true; // fails even at the starting length: deep inside
        }
    };

    double lo = 0.9 * steady; // expected subcritical (unbounded) side
    double hi = 1.2 * steady; // expected bounded side
    int guard = 0;
    while (bounded(lo)) {
        hi = lo;
        lo *= 0.85;
        if (++guard > 12) {
            throw DiagnosticError(
                "lambda_cr_consistency: no unbounded side found below the "
                "steady critical value");
        }
    }
    guard = 0;
    while (!bounded(hi)) {
        lo = hi;
        hi *= 1.2;
        if (++guard > 12) {
            throw DiagnosticError(
                "lambda_cr_consistency: no bounded side found above the "
                "steady critical value; convergence pattern is not monotone");
        }
    }

    while (hi / lo - 1.0 > opts.lambda_rel_tol) {
        double mid = 0.5 * (lo + hi);
        if (bounded(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    CriticalityComparison cmp;
    cmp.lambda_cr_pde = 0.5 * (lo + hi);
    cmp.lambda_cr_steady = steady;
    cmp.rel_gap = std::abs(cmp.lambda_cr_pde - steady) / steady;
    return cmp;
}

} // namespace thermx
