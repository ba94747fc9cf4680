#ifndef THERMX_ROOTFIND_HPP
#define THERMX_ROOTFIND_HPP

#include <functional>

namespace thermx {

/// Bracketed scalar root finding and 1-D maximization used by the steady
/// solvers and the continuation logic. All routines are deterministic.

struct RootResult {
    double x;        // root estimate (midpoint of the final bracket)
    double lo, hi;   // final bracket
    int evaluations;
};

/// Finds x in [lo, hi] with f(x) = 0 given f(lo) and f(hi) of opposite sign.
/// Illinois-damped regula falsi with a bisection safeguard; terminates when
/// the bracket is narrower than xtol (absolute).
RootResult find_root(const std::function<double(double)>& f, double lo,
                     double hi, double xtol, int max_iter = 200);

struct MaxResult {
    double x;      // maximizer estimate
    double value;  // f at the maximizer
    int evaluations;
};

/// Golden-section maximization of a unimodal f on [lo, hi] to absolute
/// tolerance xtol in x.
MaxResult find_maximum(const std::function<double(double)>& f, double lo,
                       double hi, double xtol);

} // namespace thermx

#endif // THERMX_ROOTFIND_HPP
