#ifndef THERMX_SCALING_HPP
#define THERMX_SCALING_HPP

#include <utility>
#include <vector>

#include "thermx/criticality.hpp"

namespace thermx {

struct PowerLawFit {
    double prefactor = 0.0;
    double exponent = 0.0;
    double lambda_min_used = 0.0;
    double rms_log_residual = 0.0;
    int point_count = 0;
};

/// Least squares of ln zeta0 against ln lambda over the points with
/// lambda >= lambda_min. Requires at least 4 qualifying points.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points,
                          double lambda_min);

/// Curve overload; when weighted is set, points are weighted by the inverse
/// squared log-width of their brackets.
PowerLawFit fit_power_law(const BoundaryCurve& curve, double lambda_min,
                          bool weighted = false);

/// Maximum over the lambda grid of (max - min) / median of the interpolated
/// zeta0 across the curves (log-log linear interpolation). Quantifies the
/// collapse of existence boundaries across Reynolds numbers.
/// Throws std::invalid_argument, naming the curve, when a grid value falls
/// outside a curve's lambda range.
double collapse_spread(const std::vector<BoundaryCurve>& curves,
                       const std::vector<double>& lambda_grid);

} // namespace thermx

#endif // THERMX_SCALING_HPP
