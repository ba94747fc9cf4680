#ifndef THERMX_GRID_HPP
#define THERMX_GRID_HPP

#include <optional>
#include <span>
#include <vector>

#include "thermx/problem.hpp"

namespace thermx {

/// Discretization of the fixed unit domain: rho in [0, 1] with n_rho nodes
/// (endpoints included) and n_xi axial layers past the inlet, so the layer
/// spacing is 1 / n_xi in the rescaled axial coordinate xi.
/// How the radial flux coefficient is sampled on cell faces. Midpoint
/// evaluation is second order on smooth coefficients but badly overestimates
/// the transmissibility of the cell touching the wall in the turbulent case,
/// where 1/a(rho) is integrable-singular; the integrated form captures that
/// layer exactly and reduces to midpoint sampling elsewhere.
enum class FaceScheme { Integrated, Midpoint };

struct GridSpec {
    int n_rho = 64;
    int n_xi = 64;
    /// Geometric spacing ratio toward the wall; empty means uniform.
    std::optional<double> rho_stretch;
    FaceScheme face_scheme = FaceScheme::Integrated;

    static GridSpec uniform(int n_rho, int n_xi) { return {n_rho, n_xi, {}}; }

    static GridSpec clustered(int n_rho, int n_xi, double ratio = 1.05) {
        return {n_rho, n_xi, ratio};
    }

    /// Uniform nodes for laminar flow, wall-clustered (ratio 1.05) for
    /// turbulent flow, where the flux coefficient degenerates at the wall.
    static GridSpec for_regime(const FlowRegime& regime, int n_rho, int n_xi);

    /// Throws std::invalid_argument for node counts below 32 or a
    /// non-sensible stretch ratio.
    void validate() const;

    /// Strictly increasing nodes with rho.front() == 0 and rho.back() == 1.
    std::vector<double> rho_nodes() const;

    double dxi() const { return 1.0 / n_xi; }
};

/// Excess temperature on the (rho, xi) grid, layers stored contiguously:
/// layer j holds u(., xi_j), j = 0 is the inlet.
struct Field2D {
    GridSpec grid;
    PipeProblem problem;
    double zeta0 = 0.0;
    std::vector<double> rho;
    std::vector<double> u; // (n_xi + 1) * n_rho values, layer-major

    Field2D() = default;
    Field2D(const GridSpec& g, const PipeProblem& p, double zeta0_);

    int layers() const { return grid.n_xi + 1; }

    std::span<double> layer(int j) {
        return {u.data() + static_cast<size_t>(j) * rho.size(), rho.size()};
    }
    std::span<const double> layer(int j) const {
        return {u.data() + static_cast<size_t>(j) * rho.size(), rho.size()};
    }

    double at(int i, int j) const {
        return u[static_cast<size_t>(j) * rho.size() + static_cast<size_t>(i)];
    }

    double u_max() const;

    /// Outlet layer u(., xi = 1).
    std::vector<double> outlet() const;
};

} // namespace thermx

#endif // THERMX_GRID_HPP
