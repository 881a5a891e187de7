#pragma once

// Machine and human serialisation of reports: JSON (schema odbif/1), CSV with
// shortest round-trip floats, aligned text, and single-file SVG plots.

#include "odbif/constants.hpp"
#include "odbif/radial_spectra.hpp"
#include "odbif/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace odbif {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "odbif/1";

/// Shortest decimal string that parses back to exactly `v`.
inline std::string shortest(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline Json envelope(const std::string& command)
{
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

inline Json to_json(const ProblemDims& d) { return Json{{"N", d.N}, {"m", d.m}, {"n", d.n}}; }

inline Json to_json(const DirichletConstants& c)
{
    Json j;
    j["dims"] = to_json(c.dims);
    j["j"] = c.j;
    j["j_index"] = c.j_index;
    j["nu1"] = c.nu1;
    j["lambda_n"] = c.lambda_n;
    j["mu_n"] = c.mu_n;
    j["kappa_n"] = c.kappa_n;
    j["c_n"] = c.c_n;
    j["beta_n"] = c.beta_n;
    j["delta_n"] = c.delta_n;
    j["r_star"] = c.r_star;
    j["neumann_magnitude"] = c.neumann_magnitude;
    j["residuals"] = Json{{"nu1", c.nu1_residual}, {"zeros", c.zero_residuals}};
    return j;
}

inline Json to_json(const ClassicalRadii& r)
{
    Json j;
    j["r_star"] = r.r_star;
    j["t_star"] = r.t_star ? Json(*r.t_star) : Json(nullptr);
    j["rho"] = r.rho ? Json(*r.rho) : Json(nullptr);
    if (!r.t_star_note.empty()) j["t_star_note"] = r.t_star_note;
    return j;
}

inline Json to_json(const SlabConstants& c)
{
    return Json{{"n", c.n}, {"gamma_n", c.gamma_n}, {"d_n", c.d_n}, {"a_n", c.a_n}, {"b_n", c.b_n}};
}

inline Json to_json(const RadialEigenvalue& e)
{
    return Json{{"ell", e.ell},         {"value", e.value},           {"sqrt_value", e.sqrt_value},
                {"bracket_lo", e.bracket_lo}, {"bracket_hi", e.bracket_hi}, {"residual", e.residual}};
}

inline Json to_json(const ModeTable& t)
{
    Json hits = Json::array();
    for (const auto& [k, l] : t.kernel_hits) hits.push_back(Json::array({k, l}));
    return Json{{"dims", to_json(t.dims)},
                {"lambda", t.lambda},
                {"ell_first", t.ell_first},
                {"k_max", t.sigma.rows() - 1},
                {"ell_count", t.sigma.cols()},
                {"hits", hits}};
}

inline Json to_json(const ResidualReport& r)
{
    return Json{{"problem", to_string(r.kind)},
                {"dims", to_json(r.dims)},
                {"variant", r.variant},
                {"probe", r.probe},
                {"grid", Json{{"n_r", r.grid.n_r}, {"n_x", r.grid.n_x}}},
                {"s_values", r.s_values},
                {"interior_sup", r.interior_sup},
                {"boundary_sup", r.boundary_sup},
                {"interior_slope", r.interior_slope},
                {"boundary_slope", r.boundary_slope},
                {"fitted_slope", r.fitted_slope}};
}

inline Json to_json(const LinearizationReport& r)
{
    return Json{{"probe", r.probe},
                {"eps", r.eps},
                {"interior_error", r.interior_error},
                {"boundary_error", r.boundary_error},
                {"dg_interior_sup", r.dg_interior_sup},
                {"dg_boundary_sup", r.dg_boundary_sup},
                {"error_slope", r.error_slope}};
}

inline Json to_json(const TransversalityReport& r)
{
    return Json{{"value", r.value}, {"radial_integral", r.radial_integral}, {"angular_integral", r.angular_integral}};
}

inline Json to_json(const EigenVerificationReport& r)
{
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back(Json{{"s", s.s},
                               {"n_r", s.grid.n_r},
                               {"n_x", s.grid.n_x},
                               {"spacing", s.spacing},
                               {"eigenvalue", s.eigenvalue},
                               {"residual", s.residual},
                               {"iterations", s.iterations},
                               {"neumann_mean", s.neumann_mean},
                               {"deviation", s.deviation},
                               {"opposite_sign", s.opposite_sign}});
    return Json{{"problem", to_string(r.kind)},
                {"dims", to_json(r.dims)},
                {"lambda", r.lambda},
                {"target", r.target},
                {"samples", samples},
                {"s_values", r.s_values},
                {"extrapolated", r.extrapolated},
                {"ratios", r.ratios}};
}

/// CSV with a header row; doubles in shortest round-trip form.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : cols_(header.size()) { rows_.push_back(std::move(header)); }

    CsvWriter& row(const std::vector<std::string>& cells)
    {
        if (cells.size() != cols_) throw InvalidArgument("CsvWriter: column count mismatch");
        rows_.push_back(cells);
        return *this;
    }

    void write(std::ostream& os) const
    {
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << '\n';
        }
    }

private:
    std::size_t cols_;
    std::vector<std::vector<std::string>> rows_;
};

/// Left-aligned key/value block for terminals.
inline void write_text_block(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv)
{
    std::size_t w = 0;
    for (const auto& [k, v] : kv) w = std::max(w, k.size());
    for (const auto& [k, v] : kv) os << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
}

inline void write_text_table(std::ostream& os, const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> w(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c)
            os << std::right << std::setw(static_cast<int>(w[c])) << r[c] << (c + 1 < r.size() ? "  " : "\n");
    };
    line(header);
    for (const auto& r : rows) line(r);
}

/// Static SVG line plot (polyline + frame + min/max tick labels).
inline std::string svg_plot(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& title,
                            const std::string& xlabel, const std::string& ylabel)
{
    if (xs.size() != ys.size() || xs.size() < 2) throw InvalidArgument("svg_plot: need matching series of length >= 2");
    const double W = 640, Hh = 400, ml = 70, mr = 20, mt = 40, mb = 50;
    auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
    auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
    double x0 = *xmin_it, x1 = *xmax_it, y0 = *ymin_it, y1 = *ymax_it;
    if (x1 == x0) x1 = x0 + 1.0;
    if (y1 == y0) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); };
    auto py = [&](double y) { return Hh - mb - (y - y0) / (y1 - y0) * (Hh - mt - mb); };
    std::ostringstream os;
    os << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hh << "\" viewBox=\"0 0 "
       << W << ' ' << Hh << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
       << title << "</text>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << W - ml - mr << "\" height=\"" << Hh - mt - mb
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << px(xs[i]) << ',' << py(ys[i]);
    os << "\"/>\n";
    auto label = [&](double x, double y, const std::string& anchor, const std::string& text) {
        os << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << text << "</text>\n";
    };
    label(ml, Hh - mb + 18, "middle", shortest(x0));
    label(W - mr, Hh - mb + 18, "middle", shortest(x1));
    label(ml - 6, Hh - mb + 4, "end", shortest(y0));
    label(ml - 6, mt + 4, "end", shortest(y1));
    label(W / 2, Hh - 12, "middle", xlabel);
    os << "<text x=\"16\" y=\"" << Hh / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
       << "transform=\"rotate(-90 16 " << Hh / 2 << ")\">" << ylabel << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace odbif
