#pragma once

// Command-line front end. run_cli() is the whole program; main() only forwards
// argv and the standard streams so the dispatcher can be tested in-process.
//
// Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage error,
// 3 numerical failure.

#include "odbif/constants.hpp"
#include "odbif/errors.hpp"
#include "odbif/profiles.hpp"
#include "odbif/radial_spectra.hpp"
#include "odbif/report_io.hpp"
#include "odbif/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace odbif {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitNumerical = 3 };

struct RunConfig {
    std::string command;
    std::string problem;
    int N = 0;
    int m = 1;
    int n = 0;
    std::vector<double> s_values;
    std::vector<double> eps;
    int grid_r = 0;
    int grid_x = 0;
    int count = 10;
    int oracle_grid = 0;
    int k_max = 200;
    int ell_max = 200;
    double tol = 1e-8;
    std::optional<double> lambda;
    std::string probe = "kernel";
    std::string neumann = "constant";
    int samples = 256;
    std::string format = "text";
    std::string output;
    std::string svg;
    int threads = 1;
};

namespace detail {

inline std::string resolve_output(const std::string& path)
{
    if (path.empty()) return path;
    const std::filesystem::path p(path);
    const char* dir = std::getenv("ODBIF_OUTPUT_DIR");
    if (p.is_relative() && dir && *dir) return (std::filesystem::path(dir) / p).string();
    return path;
}

inline void write_file(const std::string& path, const std::string& content)
{
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file: " + path);
    f << content;
    if (!f) throw InvalidArgument("failed writing output file: " + path);
}

inline ProblemKind parse_problem(const RunConfig& c)
{
    if (c.problem == "dirichlet") {
        if (c.N < 1) throw InvalidArgument("--N is required (>= 1) for --problem dirichlet");
        return ProblemKind::dirichlet;
    }
    if (c.problem == "slab") return ProblemKind::slab;
    throw InvalidArgument("--problem must be dirichlet or slab");
}

inline ProblemDims dims_of(const RunConfig& c)
{
    ProblemDims d{parse_problem(c) == ProblemKind::slab ? 1 : c.N, c.m, c.n};
    d.validate();
    return d;
}

inline std::string fmt_list(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + shortest(v[i]);
    return "[" + s + "]";
}

/// Where the formatted report goes, and where the PASS/FAIL line goes.
struct Emitter {
    const RunConfig& cfg;
    std::ostream& out;

    // true when the machine-readable body occupies stdout
    bool body_on_stdout() const { return cfg.output.empty() && cfg.format != "text"; }

    void emit(const Json& json, const CsvWriter& csv, const std::function<void(std::ostream&)>& text) const
    {
        std::ostringstream body;
        if (cfg.format == "json") body << json.dump(2) << '\n';
        else if (cfg.format == "csv") csv.write(body);
        else text(body);
        if (cfg.output.empty()) out << body.str();
        else write_file(resolve_output(cfg.output), body.str());
    }
};

inline int verdict(bool pass, const std::string& what, const Emitter& em, std::ostream& err)
{
    std::ostream& os = em.body_on_stdout() ? err : em.out;
    os << (pass ? "PASS " : "FAIL ") << what << '\n';
    return pass ? kExitOk : kExitFail;
}

inline int cmd_constants(const RunConfig& c, std::ostream& out)
{
    const auto kind = parse_problem(c);
    Emitter em{c, out};
    Json j = envelope("constants");
    j["problem"] = to_string(kind);
    CsvWriter csv({"key", "value"});
    std::vector<std::pair<std::string, std::string>> kv;
    auto put = [&](const std::string& k, double v) {
        csv.row({k, shortest(v)});
        kv.emplace_back(k, shortest(v));
    };
    if (kind == ProblemKind::slab) {
        if (c.n < 1) throw InvalidArgument("--n must be >= 1");
        const auto s = slab_constants(c.n);
        j["constants"] = to_json(s);
        put("gamma_n", s.gamma_n);
        put("d_n", s.d_n);
        put("a_n", s.a_n);
        put("b_n", s.b_n);
    } else {
        const auto d = dims_of(c);
        const auto k = dirichlet_constants(d);
        const auto r = classical_radii(d.N);
        j["constants"] = to_json(k);
        j["classical_radii"] = to_json(r);
        put("j", k.j);
        put("nu1", k.nu1);
        put("lambda_n", k.lambda_n);
        put("mu_n", k.mu_n);
        put("kappa_n", k.kappa_n);
        put("c_n", k.c_n);
        put("beta_n", k.beta_n);
        put("delta_n", k.delta_n);
        put("r_star", k.r_star);
        if (r.t_star) put("t_star", *r.t_star);
        put("nu1_residual", k.nu1_residual);
    }
    em.emit(j, csv, [&](std::ostream& os) { write_text_block(os, kv); });
    return kExitOk;
}

inline int cmd_spectrum(const RunConfig& c, std::ostream& out)
{
    const auto kind = parse_problem(c);
    if (c.count < 1) throw InvalidArgument("--count must be >= 1");
    Emitter em{c, out};
    Json j = envelope("spectrum");
    j["problem"] = to_string(kind);
    std::vector<std::vector<std::string>> rows;
    if (kind == ProblemKind::slab) {
        CsvWriter csv({"ell", "J_ell", "J_ell_squared"});
        Json arr = Json::array();
        for (int l = 0; l < c.count; ++l) {
            const auto e = slab_eigenvalue(l);
            arr.push_back(Json{{"ell", l}, {"J", e.value}, {"J_squared", e.value * e.value}});
            rows.push_back({std::to_string(l), shortest(e.value), shortest(e.value * e.value)});
            csv.row(rows.back());
        }
        j["values"] = arr;
        em.emit(j, csv, [&](std::ostream& os) { write_text_table(os, {"ell", "J_ell", "J_ell^2"}, rows); });
        return kExitOk;
    }
    if (c.N < 1) throw InvalidArgument("--N is required (>= 1) for --problem dirichlet");
    const auto nus = nu_eigenvalues(c.N, c.count);
    std::vector<double> oracle;
    if (c.oracle_grid > 0) {
        const auto sp = nu_oracle_spectrum(c.N, c.oracle_grid);
        const std::size_t skip = c.N == 1 ? 1 : 0; // constant mode
        for (int l = 0; l < c.count; ++l) {
            const std::size_t i = skip + static_cast<std::size_t>(l);
            oracle.push_back(i < static_cast<std::size_t>(sp.size()) ? sp[static_cast<Eigen::Index>(i)] : std::nan(""));
        }
    }
    std::vector<std::string> head{"ell", "nu", "sqrt_nu", "residual"};
    if (!oracle.empty()) head.push_back("oracle");
    CsvWriter csv(head);
    Json arr = Json::array();
    j["N"] = c.N;
    j["beta"] = radial_beta(c.N);
    for (int l = 0; l < c.count; ++l) {
        const auto& e = nus[l];
        Json row = to_json(e);
        std::vector<std::string> r{std::to_string(e.ell), shortest(e.value), shortest(e.sqrt_value),
                                   shortest(e.residual)};
        if (!oracle.empty()) {
            row["oracle"] = oracle[l];
            r.push_back(shortest(oracle[l]));
        }
        arr.push_back(row);
        rows.push_back(r);
        csv.row(r);
    }
    j["values"] = arr;
    if (c.oracle_grid > 0) j["oracle_grid"] = c.oracle_grid;
    em.emit(j, csv, [&](std::ostream& os) { write_text_table(os, head, rows); });
    return kExitOk;
}

inline int cmd_kernel(const RunConfig& c, std::ostream& out)
{
    const auto kind = parse_problem(c);
    const auto d = dims_of(c);
    Emitter em{c, out};
    ModeTable t;
    if (kind == ProblemKind::slab) t = slab_mode_table(d.n, c.lambda.value_or(slab_constants(d.n).gamma_n), c.k_max, c.ell_max, c.tol);
    else t = mode_table(d, c.lambda.value_or(dirichlet_constants(d).lambda_n), c.k_max, c.ell_max, c.tol);
    Json j = envelope("kernel");
    j["problem"] = to_string(kind);
    j["table"] = to_json(t);
    CsvWriter csv({"k", "ell", "sigma"});
    std::string hits;
    for (const auto& [k, l] : t.kernel_hits) {
        csv.row({std::to_string(k), std::to_string(l), shortest(t.sigma(k, l - t.ell_first))});
        hits += (hits.empty() ? "" : ", ") + ("(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
    em.emit(j, csv, [&](std::ostream& os) {
        os << "lambda: " << shortest(t.lambda) << '\n' << "hits: [" << hits << "]\n";
    });
    return kExitOk;
}

inline ProbeKind parse_probe(const RunConfig& c)
{
    if (c.probe == "kernel") return ProbeKind::kernel;
    if (c.probe == "negative") return ProbeKind::negative_control;
    throw InvalidArgument("--probe must be kernel or negative");
}

inline BranchSetup setup_of(const RunConfig& c, bool nonconstant)
{
    const auto kind = parse_problem(c);
    const auto d = dims_of(c);
    if (kind == ProblemKind::slab) {
        if (nonconstant) throw InvalidArgument("the nonconstant Neumann variant applies to --problem dirichlet");
        return slab_setup(d.n, d.m);
    }
    return dirichlet_setup(d, nonconstant);
}

inline int cmd_verify_branch(const RunConfig& c, std::ostream& out, std::ostream& err, bool nonconstant)
{
    if (c.neumann != "constant" && c.neumann != "nonconstant")
        throw InvalidArgument("--neumann must be constant or nonconstant");
    const auto su = setup_of(c, nonconstant || c.neumann == "nonconstant");
    const auto probe = parse_probe(c);
    const SampleGrid g{c.grid_r > 0 ? c.grid_r : 201, c.grid_x > 0 ? c.grid_x : 256};
    const auto rep = branch_residual(su, make_probe(su, probe), c.s_values, g, c.threads);
    Emitter em{c, out};
    bool pass;
    std::string what;
    if (probe == ProbeKind::kernel) {
        pass = rep.interior_slope >= 1.8 && rep.interior_slope <= 2.2 && rep.boundary_slope >= 1.8 &&
               rep.boundary_slope <= 2.2;
        what = "slopes interior=" + shortest(rep.interior_slope) + " boundary=" + shortest(rep.boundary_slope) +
               " window [1.8, 2.2]";
    } else {
        pass = rep.fitted_slope <= 1.2;
        what = "negative-control slope=" + shortest(rep.fitted_slope) + " <= 1.2";
    }
    Json j = envelope("verify branch");
    j["report"] = to_json(rep);
    j["verdict"] = pass ? "PASS" : "FAIL";
    CsvWriter csv({"s", "interior_sup", "boundary_sup"});
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < rep.s_values.size(); ++i) {
        rows.push_back({shortest(rep.s_values[i]), shortest(rep.interior_sup[i]), shortest(rep.boundary_sup[i])});
        csv.row(rows.back());
    }
    em.emit(j, csv, [&](std::ostream& os) {
        write_text_block(os, {{"problem", to_string(rep.kind)},
                              {"variant", rep.variant},
                              {"probe", rep.probe},
                              {"grid", std::to_string(g.n_r) + "x" + std::to_string(g.n_x)}});
        write_text_table(os, {"s", "interior_sup", "boundary_sup"}, rows);
        write_text_block(os, {{"interior_slope", shortest(rep.interior_slope)},
                              {"boundary_slope", shortest(rep.boundary_slope)},
                              {"fitted_slope", shortest(rep.fitted_slope)}});
    });
    return verdict(pass, what, em, err);
}

inline int cmd_verify_linearization(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const auto su = setup_of(c, c.neumann == "nonconstant");
    const auto probe = parse_probe(c);
    const SampleGrid g{c.grid_r > 0 ? c.grid_r : 201, c.grid_x > 0 ? c.grid_x : 256};
    const auto eps = c.eps.empty() ? std::vector<double>{1e-2, 1e-3, 1e-4} : c.eps;
    if (eps.size() < 3) throw InvalidArgument("--eps needs at least 3 values");
    const auto rep = linearization_check(su, make_probe(su, probe), eps, g);
    Emitter em{c, out};
    bool pass = rep.error_slope >= 0.8 && rep.error_slope <= 1.2;
    if (probe == ProbeKind::kernel) pass = pass && rep.dg_interior_sup < 1e-10 && rep.dg_boundary_sup < 1e-10;
    Json j = envelope("verify linearization");
    j["problem"] = to_string(su.kind);
    j["dims"] = to_json(su.dims);
    j["report"] = to_json(rep);
    j["verdict"] = pass ? "PASS" : "FAIL";
    CsvWriter csv({"eps", "interior_error", "boundary_error"});
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        rows.push_back({shortest(eps[i]), shortest(rep.interior_error[i]), shortest(rep.boundary_error[i])});
        csv.row(rows.back());
    }
    em.emit(j, csv, [&](std::ostream& os) {
        write_text_block(os, {{"probe", rep.probe},
                              {"dg_interior_sup", shortest(rep.dg_interior_sup)},
                              {"dg_boundary_sup", shortest(rep.dg_boundary_sup)}});
        write_text_table(os, {"eps", "interior_error", "boundary_error"}, rows);
        write_text_block(os, {{"error_slope", shortest(rep.error_slope)}});
    });
    return verdict(pass, "linearization error slope=" + shortest(rep.error_slope) + " window [0.8, 1.2]", em, err);
}

inline int cmd_verify_transversality(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const auto su = setup_of(c, false);
    const auto rep = transversality_pairing(su);
    Emitter em{c, out};
    const bool pass = rep.value < 0.0;
    Json j = envelope("verify transversality");
    j["problem"] = to_string(su.kind);
    j["dims"] = to_json(su.dims);
    j["report"] = to_json(rep);
    j["verdict"] = pass ? "PASS" : "FAIL";
    CsvWriter csv({"key", "value"});
    csv.row({"value", shortest(rep.value)})
        .row({"radial_integral", shortest(rep.radial_integral)})
        .row({"angular_integral", shortest(rep.angular_integral)});
    em.emit(j, csv, [&](std::ostream& os) {
        write_text_block(os, {{"value", shortest(rep.value)},
                              {"radial_integral", shortest(rep.radial_integral)},
                              {"angular_integral", shortest(rep.angular_integral)}});
    });
    return verdict(pass, "transversality pairing=" + shortest(rep.value) + " < 0", em, err);
}

inline int cmd_verify_eigen(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const auto kind = parse_problem(c);
    const auto d = dims_of(c);
    const EigenGridSpec fine{c.grid_r > 0 ? c.grid_r : 256, c.grid_x > 0 ? c.grid_x : 128};
    const EigenGridSpec coarse{fine.n_r / 2, fine.n_x / 2};
    const auto s = c.s_values.empty() ? std::vector<double>{0.02, 0.01} : c.s_values;
    const auto rep = eigen_verification(kind, d, s, fine, coarse, 1e-7, c.threads);
    Emitter em{c, out};
    bool pass = !rep.ratios.empty();
    for (double r : rep.ratios) pass = pass && r >= 3.0 && r <= 5.0;
    Json j = envelope("verify eigen");
    j["report"] = to_json(rep);
    j["verdict"] = pass ? "PASS" : "FAIL";
    CsvWriter csv({"s", "n_r", "n_x", "eigenvalue", "neumann_mean", "deviation"});
    std::vector<std::vector<std::string>> rows;
    for (const auto& x : rep.samples) {
        rows.push_back({shortest(x.s), std::to_string(x.grid.n_r), std::to_string(x.grid.n_x), shortest(x.eigenvalue),
                        shortest(x.neumann_mean), shortest(x.deviation)});
        csv.row(rows.back());
    }
    em.emit(j, csv, [&](std::ostream& os) {
        write_text_block(os, {{"problem", to_string(kind)}, {"target", shortest(rep.target)}});
        write_text_table(os, {"s", "n_r", "n_x", "eigenvalue", "neumann_mean", "deviation"}, rows);
        write_text_block(os, {{"extrapolated", fmt_list(rep.extrapolated)}, {"ratios", fmt_list(rep.ratios)}});
    });
    return verdict(pass, "eigen deviation ratios " + fmt_list(rep.ratios) + " window [3, 5]", em, err);
}

inline int cmd_export_profile(const RunConfig& c, std::ostream& out)
{
    const auto kind = parse_problem(c);
    const auto d = dims_of(c);
    if (d.m != 1) throw InvalidArgument("export-profile supports --m 1 only");
    if (c.s_values.size() != 1) throw InvalidArgument("export-profile takes a single --s value");
    if (c.samples < 2) throw InvalidArgument("--samples must be >= 2");
    const double s = c.s_values.front();
    const auto p = kind == ProblemKind::slab ? slab_profile(d.n, 1, s) : cylinder_profile(d, s);
    std::vector<double> xs, hs;
    for (int i = 0; i <= c.samples; ++i) {
        xs.push_back(2.0 * std::numbers::pi * i / c.samples);
        hs.push_back(p.value(xs.back()));
    }
    Emitter em{c, out};
    Json j = envelope("export-profile");
    j["problem"] = to_string(kind);
    j["dims"] = to_json(d);
    j["s"] = s;
    j["const_term"] = p.const_term();
    j["amplitude"] = p.amplitude();
    j["x"] = xs;
    j["h"] = hs;
    CsvWriter csv({"x", "h"});
    for (std::size_t i = 0; i < xs.size(); ++i) csv.row({shortest(xs[i]), shortest(hs[i])});
    em.emit(j, csv, [&](std::ostream& os) {
        write_text_block(os, {{"problem", to_string(kind)},
                              {"s", shortest(s)},
                              {"const_term", shortest(p.const_term())},
                              {"amplitude", shortest(p.amplitude())},
                              {"min_h", shortest(p.min_value())}});
    });
    if (!c.svg.empty()) {
        const std::string title = std::string(to_string(kind)) + " profile, s = " + shortest(s);
        write_file(resolve_output(c.svg), svg_plot(xs, hs, title, "x", "h(x)"));
    }
    return kExitOk;
}

inline void add_problem_options(CLI::App* app, RunConfig& c)
{
    app->add_option("--problem", c.problem, "dirichlet (cylinder) or slab")
        ->required()
        ->check(CLI::IsMember({"dirichlet", "slab"}));
    app->add_option("--N", c.N, "cross-section dimension (dirichlet)");
    app->add_option("--m", c.m, "torus dimension")->capture_default_str();
    app->add_option("--n", c.n, "Dirichlet mode index / slab mode")->required();
}

inline void add_output_options(CLI::App* app, RunConfig& c)
{
    app->add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app->add_option("--output", c.output, "write the report here (relative paths honour ODBIF_OUTPUT_DIR)");
    app->add_option("--threads", c.threads, "worker cap for sweeps")->check(CLI::Range(1, 256))->capture_default_str();
}

} // namespace detail

/// Parses argv and runs one subcommand.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Numerics for bifurcating overdetermined domains (cylinder and slab)", "odbif"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok/PASS, 1 FAIL, 2 usage error, 3 numerical failure.\n"
               "Environment: ODBIF_OUTPUT_DIR prefixes relative --output/--svg paths.");

    auto* constants = app.add_subcommand("constants", "bifurcation constants");
    detail::add_problem_options(constants, cfg);
    detail::add_output_options(constants, cfg);

    auto* spectrum = app.add_subcommand("spectrum", "radial Robin spectrum (dirichlet) or slab numbers J_ell");
    spectrum->add_option("--problem", cfg.problem)->required()->check(CLI::IsMember({"dirichlet", "slab"}));
    spectrum->add_option("--N", cfg.N, "cross-section dimension (dirichlet)");
    spectrum->add_option("--count", cfg.count, "number of eigenvalues")->capture_default_str();
    spectrum->add_option("--oracle-grid", cfg.oracle_grid, "finite-volume oracle grid (0 = off)")->capture_default_str();
    detail::add_output_options(spectrum, cfg);

    auto* kernel = app.add_subcommand("kernel", "mode table and kernel hits");
    detail::add_problem_options(kernel, cfg);
    kernel->add_option("--kmax", cfg.k_max)->capture_default_str();
    kernel->add_option("--lmax", cfg.ell_max)->capture_default_str();
    kernel->add_option("--tol", cfg.tol)->capture_default_str();
    kernel->add_option("--lambda", cfg.lambda, "override lambda (default lambda_n / gamma_n)");
    detail::add_output_options(kernel, cfg);

    auto* verify = app.add_subcommand("verify", "verification checks");
    verify->require_subcommand(1);
    const std::vector<double> default_sweep{0.04, 0.02, 0.01, 0.005};
    auto add_branch = [&](CLI::App* a) {
        detail::add_problem_options(a, cfg);
        a->add_option("--s", cfg.s_values, "s values (comma separated, decreasing)")->delimiter(',');
        a->add_option("--grid-r", cfg.grid_r, "radial samples (default 201)");
        a->add_option("--grid-x", cfg.grid_x, "angular samples (default 256)");
        a->add_option("--probe", cfg.probe, "kernel or negative")
            ->check(CLI::IsMember({"kernel", "negative"}))
            ->capture_default_str();
        detail::add_output_options(a, cfg);
    };
    auto* branch = verify->add_subcommand("branch", "residual slopes of the first-order branch");
    add_branch(branch);
    branch->add_option("--neumann", cfg.neumann, "constant or nonconstant")->capture_default_str();
    auto* neumann = verify->add_subcommand("neumann", "branch residual with the nonconstant Neumann condition");
    add_branch(neumann);
    auto* lin = verify->add_subcommand("linearization", "difference quotients against DG(0)");
    add_branch(lin);
    lin->add_option("--eps", cfg.eps, "eps values (comma separated)")->delimiter(',');
    auto* trans = verify->add_subcommand("transversality", "pairing of the lambda-derivative with the kernel");
    detail::add_problem_options(trans, cfg);
    detail::add_output_options(trans, cfg);
    auto* eigen = verify->add_subcommand("eigen", "perturbed-domain eigenproblem and Neumann deviation");
    detail::add_problem_options(eigen, cfg);
    eigen->add_option("--s", cfg.s_values, "s values (default 0.02,0.01)")->delimiter(',');
    eigen->add_option("--grid-r", cfg.grid_r, "fine radial grid (default 256)");
    eigen->add_option("--grid-x", cfg.grid_x, "fine angular grid (default 128)");
    detail::add_output_options(eigen, cfg);

    auto* exp = app.add_subcommand("export-profile", "sample h(x) to CSV/JSON and optionally SVG");
    detail::add_problem_options(exp, cfg);
    exp->add_option("--s", cfg.s_values, "amplitude parameter")->required()->expected(1);
    exp->add_option("--samples", cfg.samples)->capture_default_str();
    exp->add_option("--svg", cfg.svg, "SVG output path");
    detail::add_output_options(exp, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "usage: odbif <constants|spectrum|kernel|verify|export-profile> [options]; see --help\n";
        return kExitUsage;
    }

    try {
        if (*constants) return detail::cmd_constants(cfg, out);
        if (*spectrum) return detail::cmd_spectrum(cfg, out);
        if (*kernel) return detail::cmd_kernel(cfg, out);
        if (*exp) return detail::cmd_export_profile(cfg, out);
        if (cfg.s_values.empty() && !*eigen) cfg.s_values = default_sweep;
        if (*branch) return detail::cmd_verify_branch(cfg, out, err, false);
        if (*neumann) return detail::cmd_verify_branch(cfg, out, err, true);
        if (*lin) return detail::cmd_verify_linearization(cfg, out, err);
        if (*trans) return detail::cmd_verify_transversality(cfg, out, err);
        if (*eigen) return detail::cmd_verify_eigen(cfg, out, err);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace odbif
