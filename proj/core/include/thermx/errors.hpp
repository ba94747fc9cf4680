#ifndef THERMX_ERRORS_HPP
#define THERMX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thermx {

/// Thrown when an ODE integration stalls (step size underflow); carries the
/// radial location at which the integrator gave up.
class StiffnessError : public std::runtime_error {
public:
    StiffnessError(const std::string& what, double rho)
        : std::runtime_error(what), rho_(rho) {}
    double rho() const { return rho_; }

private:
    double rho_;
};

/// Thrown by solve_steady when the requested parameter sits inside the
/// tolerance band around the critical value, so the two wall-condition roots
/// cannot be separated. Carries the bracketing interval in the axis value.
class AtCriticalityError : public std::runtime_error {
public:
    AtCriticalityError(const std::string& what, double u0_lo, double u0_hi)
        : std::runtime_error(what), u0_lo_(u0_lo), u0_hi_(u0_hi) {}
    double u0_lo() const { return u0_lo_; }
    double u0_hi() const { return u0_hi_; }

private:
    double u0_lo_;
    double u0_hi_;
};

/// Thrown by find_zeta0 when even the smallest starting length fails to
/// converge: the parameter is far beyond the tested range or the grid is
/// too coarse to represent any solution.
class TooSupercriticalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure (non-unimodal envelope scan, non-monotone
/// convergence pattern, ...). Indicates a solver defect, not bad user input.
class DiagnosticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace thermx

#endif // THERMX_ERRORS_HPP
