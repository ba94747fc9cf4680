#ifndef THERMX_IO_HPP
#define THERMX_IO_HPP

#include <string>
#include <vector>

#include "thermx/criticality.hpp"
#include "thermx/newton.hpp"
#include "thermx/scaling.hpp"
#include "thermx/steady.hpp"

namespace thermx {

/// Shortest text that round-trips a double exactly (17 significant digits).
std::string format_double(double v);

/// Writes content to path via a temporary file in the same directory plus
/// an atomic rename, so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

// CSV emission. All files carry a header row and 17-significant-digit
// floats, so repeated runs with the same config are byte-identical.
std::string profile_csv(const SteadyProfile& profile);        // rho,u
std::string envelope_csv(const EnvelopeResult& envelope);     // u0,lambda
std::string field_csv(const Field2D& field);                  // rho,xi,u
std::string curve_csv(const BoundaryCurve& curve);
// lambda,zeta0,zeta0_lo,zeta0_hi,n_rho,n_xi

/// Curve points parsed back from CSV text: the full sweep schema or a
/// minimal lambda,zeta0 pair per row. Throws std::invalid_argument with the
/// offending line number on malformed input.
struct LoadedCurve {
    std::vector<std::pair<double, double>> points; // (lambda, zeta0)
    BoundaryCurve curve; // brackets/grid populated when the full schema is present
};
LoadedCurve parse_curve_csv(const std::string& text);
LoadedCurve load_curve_csv(const std::string& path);

// JSON summaries.
std::string field_summary_json(const Converged& solution, double zeta0);
std::string fit_json(const PowerLawFit& fit);

} // namespace thermx

#endif // THERMX_IO_HPP
