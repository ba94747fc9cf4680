#include "thermx/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace thermx {

namespace {

PowerLawFit weighted_log_fit(const std::vector<double>& lx,
                             const std::vector<double>& ly,
                             const std::vector<double>& w, double lambda_min) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sw += w[i];
        sx += w[i] * lx[i];
        sy += w[i] * ly[i];
        sxx += w[i] * lx[i] * lx[i];
        sxy += w[i] * lx[i] * ly[i];
    }
    double denom = sw * sxx - sx * sx;
    if (!(std::abs(denom) > 0.0)) {
        throw std::invalid_argument("fit_power_law: degenerate abscissae");
    }
    double slope = (sw * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / sw;

    double ss = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        double resid = ly[i] - (intercept + slope * lx[i]);
        ss += resid * resid;
    }
    PowerLawFit fit;
    fit.prefactor = std::exp(intercept);
    fit.exponent = slope;
    fit.lambda_min_used = lambda_min;
    fit.rms_log_residual = std::sqrt(ss / static_cast<double>(lx.size()));
    fit.point_count = static_cast<int>(lx.size());
    return fit;
}

} // namespace

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points,
                          double lambda_min) {
    std::vector<double> lx, ly, w;
    for (const auto& [lambda, zeta0] : points) {
        if (lambda < lambda_min) continue;
        if (!(lambda > 0.0 && zeta0 > 0.0)) {
            throw std::invalid_argument(
                "fit_power_law: points must be strictly positive");
        }
        lx.push_back(std::log(lambda));
        ly.push_back(std::log(zeta0));
        w.push_back(1.0);
    }
    if (lx.size() < 4) {
        throw std::invalid_argument(
            "fit_power_law: need at least 4 points with lambda >= lambda_min");
    }
    return weighted_log_fit(lx, ly, w, lambda_min);
}

PowerLawFit fit_power_law(const BoundaryCurve& curve, double lambda_min,
                          bool weighted) {
    std::vector<double> lx, ly, w;
    for (const auto& p : curve.points) {
        if (p.lambda < lambda_min) continue;
        lx.push_back(std::log(p.lambda));
        ly.push_back(std::log(p.zeta0));
        if (weighted && p.zeta0_hi > p.zeta0_lo && p.zeta0_lo > 0.0) {
            double sigma = 0.5 * std::log(p.zeta0_hi / p.zeta0_lo);
            w.push_back(1.0 / (sigma * sigma));
        } else {
            w.push_back(1.0);
        }
    }
    if (lx.size() < 4) {
        throw std::invalid_argument(
            "fit_power_law: need at least 4 points with lambda >= lambda_min");
    }
    return weighted_log_fit(lx, ly, w, lambda_min);
}

double collapse_spread(const std::vector<BoundaryCurve>& curves,
                       const std::vector<double>& lambda_grid) {
    if (curves.size() < 2) {
        throw std::invalid_argument("collapse_spread: need at least 2 curves");
    }
    if (lambda_grid.empty()) {
        throw std::invalid_argument("collapse_spread: empty lambda grid");
    }

    auto interp = [](const BoundaryCurve& c, double lambda, size_t index) {
        if (c.points.size() < 2) {
            std::ostringstream msg;
            msg << "collapse_spread: curve "
                << (c.label.empty() ? std::to_string(index) : c.label)
                << " has fewer than 2 points";
            throw std::invalid_argument(msg.str());
        }
        double lo = c.points.front().lambda;
        double hi = c.points.back().lambda;
        if (lambda < lo || lambda > hi) {
            std::ostringstream msg;
            msg << "collapse_spread: lambda " << lambda
                << " is outside the range [" << lo << ", " << hi
                << "] of curve "
                << (c.label.empty() ? std::to_string(index) : c.label);
            throw std::invalid_argument(msg.str());
        }
        double x = std::log(lambda);
        auto it = std::lower_bound(
            c.points.begin(), c.points.end(), lambda,
            [](const ExistencePoint& p, double v) { return p.lambda < v; });
        if (it == c.points.begin()) ++it;
        const auto& b = *it;
        const auto& a = *(it - 1);
        double xa = std::log(a.lambda), xb = std::log(b.lambda);
        double ya = std::log(a.zeta0), yb = std::log(b.zeta0);
        double t = (x - xa) / (xb - xa);
        return std::exp((1.0 - t) * ya + t * yb);
    };

    double spread = 0.0;
    std::vector<double> vals(curves.size());
    for (double lambda : lambda_grid) {
        for (size_t c = 0; c < curves.size(); ++c) {
            vals[c] = interp(curves[c], lambda, c);
        }
        auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
        std::vector<double> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        size_t n = sorted.size();
        double median = (n % 2 == 1) ? sorted[n / 2]
                                     : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
        spread = std::max(spread, (*mx - *mn) / median);
    }
    return spread;
}

} // namespace thermx
