#pragma once

// Bifurcation constants of the Dirichlet-eigenfunction cylinders and the
// partially overdetermined slabs, and the (k, l) mode tables that certify a
// one-dimensional kernel.

#include "odbif/errors.hpp"
#include "odbif/radial_spectra.hpp"
#include "odbif/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace odbif {

struct ProblemDims {
    int N = 1;
    int m = 1;
    int n = 1;

    void validate() const
    {
        if (N < 1 || m < 1 || n < 1) {
            std::ostringstream msg;
            msg << "ProblemDims: N, m, n must be >= 1 (got " << N << ", " << m << ", " << n << ")";
            throw InvalidArgument(msg.str());
        }
    }
};

/// The zero of J_b that carries bifurcation mode n: the n-th zero lying above
/// sqrt(nu_1). This is j_{b,n} for N >= 2 and j_{-1/2,n+1} = (2n+1) pi/2 for N = 1.
inline BesselZero dirichlet_mode_zero(int N, int n, double sqrt_nu1)
{
    if (n < 1) throw InvalidArgument("mode index n must be >= 1");
    const double b = radial_beta(N);
    int below = 0;
    for (;;) {
        const auto zs = bessel_zeros(BesselOrder(b), n + below);
        below = 0;
        for (const auto& z : zs)
            if (z.value <= sqrt_nu1) ++below;
        if (static_cast<int>(zs.size()) == n + below) return zs.back();
    }
}

inline BesselZero dirichlet_mode_zero(int N, int n)
{
    return dirichlet_mode_zero(N, n, nu_eigenvalue(N, 1).sqrt_value);
}

struct DirichletConstants {
    ProblemDims dims;
    double j;      // zero of J_{N/2-1} carrying mode n
    int j_index;   // its standard index (counted from the first positive zero)
    double nu1;
    double lambda_n;
    double mu_n;
    double kappa_n;
    double c_n;    // I'_{N/2-1}(j), signed
    double beta_n;
    double delta_n;
    double r_star;
    double neumann_magnitude;
    double nu1_residual;
    std::vector<double> zero_residuals;
};

struct ClassicalRadii {
    double r_star;
    std::optional<double> t_star;
    std::optional<double> rho;
    std::string t_star_note;
};

/// R_*(N) = sqrt(j^2 - nu_1) and T_*(N) = 2 pi / sqrt(j^2 - rho^2), where j is
/// the mode-1 zero and rho the zero of z J_{N/2-2}(z) + J_{N/2-1}(z) in (0, j).
inline ClassicalRadii classical_radii(int N)
{
    const auto nu1 = nu_eigenvalue(N, 1);
    const auto j = dirichlet_mode_zero(N, 1, nu1.sqrt_value).value;
    ClassicalRadii out;
    out.r_star = std::sqrt(j * j - nu1.value);

    const double b = radial_beta(N);
    auto f = [b](double z) { return z * detail::cyl_j(b - 1.0, z) + detail::cyl_j(b, z); };
    // sign-change scan on (0, j); a single change is expected
    const int steps = 400;
    const double lo0 = 1e-6 * j;
    std::vector<std::pair<double, double>> brackets;
    double a = lo0, fa = f(a);
    for (int i = 1; i <= steps; ++i) {
        const double x = lo0 + (j - lo0) * i / steps;
        const double fx = f(x);
        if (std::signbit(fa) != std::signbit(fx)) brackets.emplace_back(a, x);
        a = x;
        fa = fx;
    }
    if (brackets.size() != 1) {
        std::ostringstream msg;
        msg << "rho_{N/2-1,1}: expected one sign change in (0, " << j << "), found "
            << brackets.size();
        out.t_star_note = msg.str();
        return out;
    }
    const double rho = solve_bracketed(f, brackets[0].first, brackets[0].second, "rho");
    out.rho = rho;
    out.t_star = 2.0 * std::numbers::pi / std::sqrt(j * j - rho * rho);
    out.t_star_note = "rho is the zero of z J_{N/2-2}(z) + J_{N/2-1}(z) below the mode-1 zero";
    return out;
}

inline DirichletConstants dirichlet_constants(const ProblemDims& dims)
{
    dims.validate();
    const int N = dims.N;
    const double b = radial_beta(N);
    const auto nu1 = nu_eigenvalue(N, 1);
    const auto jz = dirichlet_mode_zero(N, dims.n, nu1.sqrt_value);
    const auto j1 = dirichlet_mode_zero(N, 1, nu1.sqrt_value);
    const double j = jz.value;

    DirichletConstants c{};
    c.dims = dims;
    c.j = j;
    c.j_index = jz.index;
    c.nu1 = nu1.value;
    c.lambda_n = j * j - nu1.value;
    if (!(c.lambda_n > 0.0)) throw NumericalError("dirichlet_constants: lambda_n <= 0");
    c.mu_n = j * j / c.lambda_n;
    c.kappa_n = 1.0 / j;
    c.c_n = i_nu_deriv(BesselOrder(b), j);
    const double psi1 = i_nu(BesselOrder(b), nu1.sqrt_value);
    c.beta_n = psi1 / (j * c.c_n * std::sqrt(c.lambda_n));
    c.delta_n = -psi1 / (j * c.c_n);
    c.r_star = std::sqrt(j1.value * j1.value - nu1.value);
    c.neumann_magnitude = std::abs(c.c_n);
    c.nu1_residual = nu1.residual;
    c.zero_residuals = {jz.residual, j1.residual};

    const double cross = c.delta_n + c.beta_n * std::sqrt(c.lambda_n);
    if (!(std::abs(cross) <= 1e-12 * std::abs(c.delta_n)))
        throw NumericalError("dirichlet_constants: delta_n = -beta_n sqrt(lambda_n) violated");
    return c;
}

struct SlabConstants {
    int n;
    double gamma_n;
    double d_n;
    double a_n;
    double b_n;
};

inline SlabConstants slab_constants(int n)
{
    if (n < 1) throw InvalidArgument("slab_constants: n must be >= 1");
    constexpr double pi = std::numbers::pi;
    const double nn = static_cast<double>(n) * n;
    SlabConstants c{};
    c.n = n;
    c.gamma_n = nn * pi * pi - pi * pi / 4.0;
    c.d_n = nn / (nn - 0.25);
    c.a_n = 1.0 / (n * pi);
    c.b_n = 1.0 / std::sqrt(c.gamma_n);
    return c;
}

struct ModeTable {
    ProblemDims dims;
    double lambda;
    int ell_first; // 1 for the cylinder, 0 for the slab
    Eigen::MatrixXd sigma; // rows k = 0..k_max, cols l = ell_first..ell_max
    std::vector<std::pair<int, int>> kernel_hits;
};

namespace detail {

inline void check_table_args(int k_max, int ell_max, double tol)
{
    if (k_max < 2 || ell_max < 2) throw InvalidArgument("mode table: k_max, ell_max must be >= 2");
    if (!(tol > 0.0)) throw InvalidArgument("mode table: tol must be > 0");
}

inline void fill_table(ModeTable& t, double top, const std::vector<double>& radial, int k_max,
                       double tol)
{
    const int cols = static_cast<int>(radial.size());
    t.sigma.resize(k_max + 1, cols);
    for (int k = 0; k <= k_max; ++k) {
        for (int c = 0; c < cols; ++c) {
            const double s = radial[c] - top + static_cast<double>(k) * k * t.lambda;
            t.sigma(k, c) = s;
            if (std::abs(s) < tol) t.kernel_hits.emplace_back(k, c + t.ell_first);
        }
    }
}

} // namespace detail

/// sigma_{k,l} = nu_l - j^2 + k^2 lambda for k = 0..k_max, l = 1..ell_max.
inline ModeTable mode_table(const ProblemDims& dims, double lambda, int k_max, int ell_max,
                            double tol = 1e-8)
{
    dims.validate();
    detail::check_table_args(k_max, ell_max, tol);
    const auto nus = nu_eigenvalues(dims.N, ell_max);
    const double j = dirichlet_mode_zero(dims.N, dims.n, nus.front().sqrt_value).value;
    std::vector<double> radial;
    radial.reserve(nus.size());
    for (const auto& v : nus) radial.push_back(v.value);
    ModeTable t{dims, lambda, 1, {}, {}};
    detail::fill_table(t, j * j, radial, k_max, tol);
    return t;
}

/// sigma~_{k,l} = J_l^2 - n^2 pi^2 + k^2 lambda for k = 0..k_max, l = 0..ell_max.
inline ModeTable slab_mode_table(int n, double lambda, int k_max, int ell_max, double tol = 1e-8)
{
    if (n < 1) throw InvalidArgument("slab_mode_table: n must be >= 1");
    detail::check_table_args(k_max, ell_max, tol);
    std::vector<double> radial;
    for (int l = 0; l <= ell_max; ++l) {
        const double J = slab_eigenvalue(l).value;
        radial.push_back(J * J);
    }
    const double top = static_cast<double>(n) * n * std::numbers::pi * std::numbers::pi;
    ModeTable t{ProblemDims{1, 1, n}, lambda, 0, {}, {}};
    detail::fill_table(t, top, radial, k_max, tol);
    return t;
}

} // namespace odbif
