#include "thermx/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermx {

GridSpec GridSpec::for_regime(const FlowRegime& regime, int n_rho, int n_xi) {
    return regime.is_turbulent() ? clustered(n_rho, n_xi) : uniform(n_rho, n_xi);
}

void GridSpec::validate() const {
    if (n_rho < 32) {
        throw std::invalid_argument("GridSpec: n_rho must be at least 32");
    }
    if (n_xi < 32) {
        throw std::invalid_argument("GridSpec: n_xi must be at least 32");
    }
    if (rho_stretch && !(*rho_stretch > 1.0 && *rho_stretch < 2.0)) {
        throw std::invalid_argument(
            "GridSpec: rho_stretch must lie in (1, 2) when present");
    }
}

std::vector<double> GridSpec::rho_nodes() const {
    validate();
    std::vector<double> rho(static_cast<size_t>(n_rho));
    int m = n_rho - 1; // interval count
    if (!rho_stretch) {
        for (int i = 0; i <= m; ++i) {
            rho[static_cast<size_t>(i)] = static_cast<double>(i) / m;
        }
    } else {
        // spacings shrink by the stretch ratio toward the wall
        double q = 1.0 / *rho_stretch;
        double h0 = (1.0 - q) / (1.0 - std::pow(q, m));
        double x = 0.0, h = h0;
        rho[0] = 0.0;
        for (int i = 1; i < m; ++i) {
            x += h;
            h *= q;
            rho[static_cast<size_t>(i)] = x;
        }
    }
    rho.front() = 0.0;
    rho.back() = 1.0;
    return rho;
}

Field2D::Field2D(const GridSpec& g, const PipeProblem& p, double zeta0_)
    : grid(g), problem(p), zeta0(zeta0_), rho(g.rho_nodes()),
      u(static_cast<size_t>(g.n_xi + 1) * rho.size(), 0.0) {
    auto inlet = layer(0);
    for (size_t i = 0; i < rho.size(); ++i) {
        inlet[i] = problem.inlet_value(rho[i]);
    }
    inlet.back() = 0.0;
}

double Field2D::u_max() const {
    return u.empty() ? 0.0 : *std::max_element(u.begin(), u.end());
}

std::vector<double> Field2D::outlet() const {
    auto l = layer(grid.n_xi);
    return {l.begin(), l.end()};
}

} // namespace thermx
