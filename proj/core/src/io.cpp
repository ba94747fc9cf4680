#include "thermx/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace thermx {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("atomic_write_file: cannot open " +
                                     tmp.string());
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("atomic_write_file: write failed for " +
                                     tmp.string());
        }
    }
    fs::rename(tmp, target);
}

std::string profile_csv(const SteadyProfile& profile) {
    std::ostringstream out;
    out << "rho,u\n";
    for (size_t i = 0; i < profile.rho_nodes.size(); ++i) {
        out << format_double(profile.rho_nodes[i]) << ','
            << format_double(profile.u_values[i]) << '\n';
    }
    return out.str();
}

std::string envelope_csv(const EnvelopeResult& envelope) {
    std::ostringstream out;
    out << "u0,lambda\n";
    for (const auto& [u0, lambda] : envelope.curve) {
        out << format_double(u0) << ',' << format_double(lambda) << '\n';
    }
    return out.str();
}

std::string field_csv(const Field2D& field) {
    std::ostringstream out;
    out << "rho,xi,u\n";
    for (int j = 0; j <= field.grid.n_xi; ++j) {
        double xi = static_cast<double>(j) / field.grid.n_xi;
        auto layer = field.layer(j);
        for (size_t i = 0; i < field.rho.size(); ++i) {
            out << format_double(field.rho[i]) << ',' << format_double(xi) << ','
                << format_double(layer[i]) << '\n';
        }
    }
    return out.str();
}

std::string curve_csv(const BoundaryCurve& curve) {
    std::ostringstream out;
    out << "lambda,zeta0,zeta0_lo,zeta0_hi,n_rho,n_xi\n";
    for (const auto& p : curve.points) {
        out << format_double(p.lambda) << ',' << format_double(p.zeta0) << ','
            << format_double(p.zeta0_lo) << ',' << format_double(p.zeta0_hi)
            << ',' << p.grid.n_rho << ',' << p.grid.n_xi << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream s(line);
    while (std::getline(s, cell, ',')) cells.push_back(cell);
    return cells;
}

double parse_cell(const std::string& cell, int line_no) {
    try {
        size_t pos = 0;
        double v = std::stod(cell, &pos);
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("curve CSV line " + std::to_string(line_no) +
                                    ": cannot parse number '" + cell + "'");
    }
}

} // namespace

LoadedCurve parse_curve_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool full_schema = false;
    LoadedCurve out;

    if (!std::getline(in, line)) {
        throw std::invalid_argument("curve CSV: empty input");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "lambda,zeta0,zeta0_lo,zeta0_hi,n_rho,n_xi") {
        full_schema = true;
    } else if (line != "lambda,zeta0") {
        throw std::invalid_argument(
            "curve CSV line 1: expected header 'lambda,zeta0,...' but got '" +
            line + "'");
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        size_t expect = full_schema ? 6 : 2;
        if (cells.size() != expect) {
            throw std::invalid_argument(
                "curve CSV line " + std::to_string(line_no) + ": expected " +
                std::to_string(expect) + " columns, found " +
                std::to_string(cells.size()));
        }
        double lambda = parse_cell(cells[0], line_no);
        double zeta0 = parse_cell(cells[1], line_no);
        out.points.emplace_back(lambda, zeta0);
        if (full_schema) {
            ExistencePoint p;
            p.lambda = lambda;
            p.zeta0 = zeta0;
            p.zeta0_lo = parse_cell(cells[2], line_no);
            p.zeta0_hi = parse_cell(cells[3], line_no);
            p.grid.n_rho = static_cast<int>(parse_cell(cells[4], line_no));
            p.grid.n_xi = static_cast<int>(parse_cell(cells[5], line_no));
            out.curve.points.push_back(std::move(p));
        }
    }
    return out;
}

LoadedCurve load_curve_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open curve CSV: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_csv(buf.str());
}

std::string field_summary_json(const Converged& solution, double zeta0) {
    nlohmann::json j;
    j["zeta0"] = zeta0;
    j["u_max"] = solution.field.u_max();
    j["residual_norm"] = solution.residual_norm;
    j["outlet"] = solution.field.outlet();
    j["rho"] = solution.field.rho;
    j["newton_iters_per_layer"] = solution.newton_iters_per_layer;
    return j.dump(2) + "\n";
}

std::string fit_json(const PowerLawFit& fit) {
    nlohmann::json j;
    j["prefactor"] = fit.prefactor;
    j["exponent"] = fit.exponent;
    j["lambda_min"] = fit.lambda_min_used;
    j["rms_log_residual"] = fit.rms_log_residual;
    j["n_points"] = fit.point_count;
    return j.dump(2) + "\n";
}

} // namespace thermx
