// Acceptance run: one PASS/FAIL line per criterion, with the measured value,
// the pinned tolerance and the wall time against its limit.

#include "odbif/constants.hpp"
#include "odbif/radial_spectra.hpp"
#include "odbif/specfun.hpp"
#include "odbif/verify.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#ifndef ODBIF_CLI_PATH
#error "ODBIF_CLI_PATH must point at the odbif executable"
#endif

using namespace odbif;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

std::string g(double v)
{
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

// root of tan z = -z in (pi/2, pi) by plain bisection on sin z + z cos z
double tan_root()
{
    double a = pi / 2 + 1e-9, b = pi - 1e-12;
    for (int i = 0; i < 200; ++i) {
        const double c = 0.5 * (a + b);
        if ((std::sin(a) + a * std::cos(a) > 0) == (std::sin(c) + c * std::cos(c) > 0)) a = c;
        else b = c;
    }
    return 0.5 * (a + b);
}

Outcome c1_slab_constants()
{
    const auto c = slab_constants(1);
    const double err = std::max({std::abs(c.d_n / (4.0 / 3.0) - 1), std::abs(c.a_n * pi - 1),
                                 std::abs(c.b_n / (2 / (pi * std::sqrt(3.0))) - 1),
                                 std::abs(c.gamma_n / (0.75 * pi * pi) - 1)});
    return {err <= 1e-14, "max rel err " + g(err) + " (tol 1e-14)"};
}

Outcome c2_n1_spectrum()
{
    double err = 0.0;
    const auto nus = nu_eigenvalues(1, 10);
    for (int l = 1; l <= 10; ++l) err = std::max(err, std::abs(nus[l - 1].value - l * l * pi * pi));
    return {err <= 1e-10, "max |nu_l - l^2 pi^2| " + g(err) + " (tol 1e-10)"};
}

Outcome c3_n3_reduction()
{
    const double z = tan_root();
    const auto e = nu_eigenvalue(3, 1);
    const double e1 = std::abs(e.sqrt_value - z);
    const double e2 = std::abs(e.value - z * z);
    const double lam = dirichlet_constants({3, 1, 1}).lambda_n;
    const double e3 = std::abs(lam - (pi * pi - z * z));
    const bool ok = e1 <= 1e-10 && e2 <= 1e-10 && e3 <= 1e-12 && std::abs(z - 2.028757838) < 1e-9;
    return {ok, "|sqrt(nu1)-z| " + g(e1) + ", |nu1-z^2| " + g(e2) + " (tol 1e-10), |lambda1-(pi^2-z^2)| " + g(e3) +
                    " (tol 1e-12)"};
}

Outcome c4_oracle()
{
    double worst = 0.0;
    for (int N : {1, 2, 3})
        for (int l : {1, 2, 3}) {
            const double a = nu_eigenvalue(N, l).value;
            const double b = nu_eigenvalue_oracle(N, l, 512);
            worst = std::max(worst, std::abs(a - b) / a);
        }
    return {worst <= 1e-3, "max rel gap " + g(worst) + " (tol 1e-3)"};
}

Outcome c5_kernel()
{
    bool ok = true;
    int tables = 0;
    for (int N : {1, 2, 3, 4})
        for (int n : {1, 2, 3}) {
            const ProblemDims d{N, 1, n};
            const double lam = dirichlet_constants(d).lambda_n;
            const auto t = mode_table(d, lam, 200, 200);
            ok = ok && t.kernel_hits == std::vector<std::pair<int, int>>{{1, 1}};
            ok = ok && mode_table(d, lam + 0.37, 200, 200).kernel_hits.empty();
            tables += 2;
        }
    for (int n : {1, 2, 3}) {
        const double gam = slab_constants(n).gamma_n;
        ok = ok && slab_mode_table(n, gam, 200, 200).kernel_hits == std::vector<std::pair<int, int>>{{1, 0}};
        ok = ok && slab_mode_table(n, gam + 0.37, 200, 200).kernel_hits.empty();
        tables += 2;
    }
    return {ok, std::to_string(tables) + " tables 200x200, hits exactly (1,1)/(1,0), none at lambda+0.37"};
}

Outcome c6_interlacing()
{
    bool ok = true;
    for (int N : {1, 2, 3, 4}) {
        const double b = radial_beta(N);
        const auto nus = nu_eigenvalues(N, 11);
        const auto jb = bessel_zeros(BesselOrder(b), 11);
        const auto jb1 = bessel_zeros(BesselOrder(b + 1), 11);
        if (N == 1) {
            // 2b+1 = 0: sqrt(nu_l) = j_{1/2,l} exactly; right-hand bound strict
            for (int l = 1; l <= 10; ++l)
                ok = ok && std::abs(nus[l - 1].sqrt_value - jb1[l - 1].value) < 1e-12 &&
                     nus[l - 1].sqrt_value < jb[l].value;
            continue;
        }
        ok = ok && nus[0].sqrt_value < jb[0].value;
        for (int l = 1; l <= 10; ++l)
            ok = ok && jb1[l - 1].value < nus[l].sqrt_value && nus[l].sqrt_value < jb[l].value;
    }
    const double growth = std::abs(bessel_zero(BesselOrder(0.0), 50).value / 50 - pi);
    ok = ok && growth < 0.02;
    return {ok, "shifted interlacing N=2..4, equality form N=1, l<=10; |j_{0,50}/50 - pi| " + g(growth) +
                    " (tol 0.02)"};
}

Outcome c7_orthogonality()
{
    double worst = 0.0;
    for (int N : {1, 2, 3}) {
        std::vector<RadialEigenfunction> f;
        for (int l = 1; l <= 4; ++l) f.push_back(radial_eigenfunction(N, l));
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                auto integrand = [&](double r) { return f[a](r) * f[b](r) * std::pow(r, N - 1); };
                const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0,
                                                                                               15, 1e-14);
                worst = std::max(worst, std::abs(v));
            }
    }
    return {worst < 1e-8, "max |<psi_m, psi_l>| " + g(worst) + " (tol 1e-8, Gauss-Kronrod)"};
}

const std::vector<double> kSweep{0.04, 0.02, 0.01, 0.005};

bool in_window(double s) { return s >= 1.8 && s <= 2.2; }

Outcome c8_branch_slopes()
{
    const auto d = dirichlet_branch_residual({1, 1, 1}, kSweep);
    const auto s = slab_branch_residual(1, 1, kSweep);
    const auto dn = dirichlet_branch_residual({1, 1, 1}, kSweep, {}, ProbeKind::negative_control);
    const auto sn = slab_branch_residual(1, 1, kSweep, {}, ProbeKind::negative_control);
    const bool ok = in_window(d.interior_slope) && in_window(d.boundary_slope) && in_window(s.interior_slope) &&
                    in_window(s.boundary_slope) && dn.fitted_slope <= 1.2 && sn.fitted_slope <= 1.2;
    return {ok, "cylinder " + g(d.interior_slope) + "/" + g(d.boundary_slope) + ", slab " + g(s.interior_slope) + "/" +
                    g(s.boundary_slope) + " (window [1.8,2.2]); controls " + g(dn.fitted_slope) + ", " +
                    g(sn.fitted_slope) + " (<= 1.2)"};
}

Outcome c9_transversality()
{
    // separable closed forms: |S^{N-1}| int_0^1 psi^2 r^{N-1} dr times int cos^2 = pi
    const double p1 = transversality_pairing(dirichlet_setup({1, 1, 1})).value;
    const double o1 = -2.0 * (2 / pi) * 0.5 * pi; // psi = sqrt(2/pi) cos(pi r)
    const double z = std::sqrt(dirichlet_constants({3, 1, 1}).nu1);
    const double p3 = transversality_pairing(dirichlet_setup({3, 1, 1})).value;
    const double o3 = -4 * pi * (2 / pi) / (z * z) * (0.5 - std::sin(2 * z) / (4 * z)) * pi;
    const double ps = transversality_pairing(slab_setup(1)).value;
    const double os = -1.0 * pi; // int_{-1}^{1} sin^2(pi t/2) dt = 1
    const double err = std::max({std::abs(p1 - o1), std::abs(p3 - o3), std::abs(ps - os)});
    const bool ok = p1 < 0 && p3 < 0 && ps < 0 && err <= 1e-8;
    return {ok, "values " + g(p1) + ", " + g(p3) + ", " + g(ps) + "; max oracle err " + g(err) + " (tol 1e-8)"};
}

Outcome c10_eigen()
{
    const std::vector<EigenGridSpec> grids{{64, 32}, {128, 64}, {256, 128}};
    const auto fc = flat_eigen_convergence(ProblemKind::dirichlet, {1, 1, 1}, grids);
    const auto fs = flat_eigen_convergence(ProblemKind::slab, {1, 1, 1}, grids);
    bool ok = true;
    std::string flat;
    for (const auto* f : {&fc, &fs})
        for (double r : f->ratios) {
            ok = ok && r >= 3.5 && r <= 4.5;
            flat += g(r) + " ";
        }
    const auto ec = eigen_verification(ProblemKind::dirichlet, {1, 1, 1}, {0.02, 0.01}, {256, 128}, {128, 64});
    const auto es = eigen_verification(ProblemKind::slab, {1, 1, 1}, {0.02, 0.01}, {256, 128}, {128, 64});
    const double rc = ec.ratios.at(0), rs = es.ratios.at(0);
    ok = ok && rc >= 3 && rc <= 5 && rs >= 3 && rs <= 5;
    return {ok, "flat ratios " + flat + "(window [3.5,4.5]); deviation ratios cylinder " + g(rc) + ", slab " + g(rs) +
                    " (window [3,5])"};
}

Outcome c11_nonconstant()
{
    const auto r = nonconstant_neumann_residual({1, 1, 1}, kSweep);
    const auto n = nonconstant_neumann_residual({1, 1, 1}, kSweep, {}, ProbeKind::negative_control);
    const bool ok = in_window(r.interior_slope) && in_window(r.boundary_slope) && n.fitted_slope <= 1.2;
    return {ok, "slopes " + g(r.interior_slope) + "/" + g(r.boundary_slope) + " (window [1.8,2.2]); control " +
                    g(n.fitted_slope) + " (<= 1.2)"};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome c12_determinism()
{
    const auto dir = std::filesystem::temp_directory_path() / "odbif_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string cli = ODBIF_CLI_PATH;
    const std::vector<std::pair<std::string, std::string>> runs{
        {"verify branch --problem dirichlet --N 1 --n 1 --format json", "json"},
        {"verify branch --problem slab --n 1 --format csv", "csv"},
        {"constants --problem dirichlet --N 3 --n 1 --format json", "json"},
        {"verify eigen --problem slab --n 1 --grid-r 64 --grid-x 32 --format csv", "csv"}};
    bool ok = true;
    int k = 0;
    for (const auto& [args, ext] : runs) {
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            const auto path = dir / ("run" + std::to_string(k) + "_" + std::to_string(rep) + "." + ext);
            const std::string cmd = "\"" + cli + "\" " + args + " --output \"" + path.string() + "\" >/dev/null 2>&1";
            ok = ok && std::system(cmd.c_str()) == 0;
            const auto body = slurp(path);
            ok = ok && !body.empty();
            if (rep == 0) first = body;
            else ok = ok && body == first;
        }
        ++k;
    }
    return {ok, std::to_string(runs.size()) + " configs run twice, byte-identical JSON/CSV"};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "slab constants", 1.0, c1_slab_constants},
        {2, "N=1 radial spectrum", 1.0, c2_n1_spectrum},
        {3, "N=3 reduction to tan z = -z", 1.0, c3_n3_reduction},
        {4, "finite-volume oracle gap", 10.0, c4_oracle},
        {5, "kernel uniqueness", 5.0, c5_kernel},
        {6, "interlacing and growth", 2.0, c6_interlacing},
        {7, "orthogonality", 2.0, c7_orthogonality},
        {8, "branch residual slopes", 30.0, c8_branch_slopes},
        {9, "transversality pairing", 2.0, c9_transversality},
        {10, "eigen verification", 120.0, c10_eigen},
        {11, "nonconstant Neumann slopes", 15.0, c11_nonconstant},
        {12, "CLI determinism", 60.0, c12_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.pass && dt < c.limit_s;
        if (!pass) ++failed;
        std::printf("%s [%2d] %-30s %s; %.3f s (limit %g s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), dt, c.limit_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
