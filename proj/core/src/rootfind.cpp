#include "thermx/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace thermx {

RootResult find_root(const std::function<double(double)>& f, double lo,
                     double hi, double xtol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    int evals = 2;
    if (flo == 0.0) return {lo, lo, lo, evals};
    if (fhi == 0.0) return {hi, hi, hi, evals};
    if ((flo > 0) == (fhi > 0)) {
        throw std::invalid_argument("find_root: endpoints do not bracket a root");
    }

    int side = 0; // Illinois bookkeeping: which endpoint was retained last
    for (int it = 0; it < max_iter && (hi - lo) > xtol; ++it) {
        double mid;
        double denom = fhi - flo;
        if (denom != 0.0) {
            mid = hi - fhi * (hi - lo) / denom;
            // keep the trial strictly interior, else fall back to bisection
            double margin = 0.01 * (hi - lo);
            if (!(mid > lo + margin && mid < hi - margin)) {
                mid = 0.5 * (lo + hi);
            }
        } else {
            mid = 0.5 * (lo + hi);
        }
        double fmid = f(mid);
        ++evals;
        if (fmid == 0.0) return {mid, mid, mid, evals};
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
            if (side == -1) fhi *= 0.5;
            side = -1;
        } else {
            hi = mid;
            fhi = fmid;
            if (side == 1) flo *= 0.5;
            side = 1;
        }
    }
    return {0.5 * (lo + hi), lo, hi, evals};
}

MaxResult find_maximum(const std::function<double(double)>& f, double lo,
                       double hi, double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int evals = 2;
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
        ++evals;
    }
    double xm = 0.5 * (a + b);
    return {xm, f1 > f2 ? f1 : f2, evals};
}

} // namespace thermx
