#pragma once

// Eigenvalues of  -w'' - (N-1)/r w' = nu w,  w'(1) + (N-1) w(1) = 0,  w regular at 0,
// and the slab values J_l = (l + 1/2) pi.

#include "odbif/errors.hpp"
#include "odbif/radial_expr.hpp"
#include "odbif/roots.hpp"
#include "odbif/specfun.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace odbif {

struct RadialEigenvalue {
    int ell;
    double beta;
    double value;      // nu_l
    double sqrt_value; // sqrt(nu_l)
    double bracket_lo; // interlacing bracket used by the root finder
    double bracket_hi;
    double residual;   // |z J_{b+1}(z)/J_b(z) - (2b+1)| at z = sqrt(nu_l)
};

struct SlabEigenvalue {
    int ell;
    double value;
};

inline double radial_beta(int N)
{
    if (N < 1) throw InvalidArgument("N must be >= 1");
    return 0.5 * N - 1.0;
}

namespace detail {

// z^{-b} (z J_{b+1}(z) - (2b+1) J_b(z)); same positive zeros, no poles, O(1) at 0.
inline double robin_secular(double b, double z)
{
    return z * z * i_nu_total(BesselOrder(b + 1.0), z) - (2.0 * b + 1.0) * i_nu_total(BesselOrder(b), z);
}

inline double robin_ratio_residual(double b, double z)
{
    const double jb = detail::cyl_j(b, z);
    const double jb1 = detail::cyl_j(b + 1.0, z);
    return std::abs(z * jb1 / jb - (2.0 * b + 1.0));
}

} // namespace detail

/// nu_1 .. nu_count for dimension N. For N >= 2 the l-th root lies in
/// (j_{b+1,l-1}, j_{b,l}) (with j_{b+1,0} := 0); for N = 1 the equation
/// degenerates to J_{1/2}(z) = 0 and the l-th root l*pi lies in (j_{b,l}, j_{b,l+1}).
inline std::vector<RadialEigenvalue> nu_eigenvalues(int N, int count)
{
    const double b = radial_beta(N);
    if (count < 1) throw InvalidArgument("nu_eigenvalues: count must be >= 1");
    const auto jb = bessel_zeros(BesselOrder(b), count + 1);
    const auto jb1 = bessel_zeros(BesselOrder(b + 1.0), count);

    auto g = [b](double z) { return detail::robin_secular(b, z); };
    std::vector<RadialEigenvalue> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int l = 1; l <= count; ++l) {
        double lo, hi;
        if (N == 1) {
            lo = jb[l - 1].value;
            hi = jb[l].value;
        } else {
            lo = l == 1 ? 0.0 : jb1[l - 2].value;
            hi = jb[l - 1].value;
        }
        std::ostringstream what;
        what << "nu_eigenvalue(N=" << N << ", l=" << l << ")";
        const double z = solve_bracketed(g, lo, hi, what.str());
        const double res = detail::robin_ratio_residual(b, z);
        // the ratio amplifies rounding in z roughly by z itself
        const double tol = 1e-11 * std::max(1.0, z / 10.0);
        if (!(res < tol)) {
            std::ostringstream msg;
            msg << what.str() << ": residual " << res << " exceeds " << tol;
            throw NumericalError(msg.str(), lo, hi);
        }
        out.push_back(RadialEigenvalue{l, b, z * z, z, lo, hi, res});
    }
    return out;
}

inline RadialEigenvalue nu_eigenvalue(int N, int ell)
{
    if (ell < 1) throw InvalidArgument("nu_eigenvalue: ell must be >= 1");
    return nu_eigenvalues(N, ell).back();
}

inline SlabEigenvalue slab_eigenvalue(int ell)
{
    if (ell < 0) throw InvalidArgument("slab_eigenvalue: ell must be >= 0");
    return SlabEigenvalue{ell, (ell + 0.5) * std::numbers::pi};
}

/// psi(r) = I_b(r sqrt(nu)) together with its first two derivatives.
struct RadialEigenfunction {
    int N;
    double nu;
    RadialExpr psi;
    RadialExpr dpsi;
    RadialExpr d2psi;

    double operator()(double r) const { return psi(r); }
    double deriv(double r) const { return dpsi(r); }
    double second(double r) const { return d2psi(r); }
};

inline RadialEigenfunction radial_eigenfunction(int N, double nu)
{
    auto psi = RadialExpr::bessel(radial_beta(N), std::sqrt(nu));
    auto d1 = psi.derivative();
    auto d2 = d1.derivative();
    return RadialEigenfunction{N, nu, psi, d1, d2};
}

inline RadialEigenfunction radial_eigenfunction(int N, int ell)
{
    return radial_eigenfunction(N, nu_eigenvalue(N, ell).value);
}

/// All eigenvalues (ascending) of a cell-centred finite-volume discretisation of
/// -(r^{N-1} w')'/r^{N-1} on [0,1] with the Robin row, using exact cell volumes.
/// Second order in 1/grid_size.
inline Eigen::VectorXd nu_oracle_spectrum(int N, int grid_size)
{
    if (N < 1) throw InvalidArgument("N must be >= 1");
    if (grid_size < 64) throw InvalidArgument("grid_size must be >= 64");
    const int M = grid_size;
    const double h = 1.0 / M;
    const double d = N - 1.0;

    Eigen::VectorXd vol(M), diag = Eigen::VectorXd::Zero(M), off(M - 1);
    auto face = [&](int i) { return std::pow(i * h, d); }; // r^{N-1} at face i*h
    for (int i = 0; i < M; ++i) {
        vol[i] = (std::pow((i + 1) * h, N) - std::pow(i * h, N)) / N;
        if (i > 0) diag[i] += face(i) / h;
        if (i < M - 1) diag[i] += face(i + 1) / h;
    }
    for (int i = 0; i + 1 < M; ++i) off[i] = -face(i + 1) / h;
    // boundary value extrapolated through the Robin condition
    diag[M - 1] += d / (1.0 + d * h / 2.0);

    // symmetric form V^{-1/2} K V^{-1/2}
    Eigen::VectorXd s = vol.cwiseSqrt().cwiseInverse();
    Eigen::VectorXd a = diag.cwiseProduct(s).cwiseProduct(s);
    Eigen::VectorXd e(M - 1);
    for (int i = 0; i + 1 < M; ++i) e[i] = off[i] * s[i] * s[i + 1];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(a, e, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("nu_oracle_spectrum: eigensolver failed");
    return es.eigenvalues();
}

/// Independent estimate of nu_l from nu_oracle_spectrum. For N = 1 the
/// constant mode (nu = 0) is skipped.
inline double nu_eigenvalue_oracle(int N, int ell, int grid_size)
{
    if (ell < 1) throw InvalidArgument("ell must be >= 1");
    const auto ev = nu_oracle_spectrum(N, grid_size);
    const int idx = ell - 1 + (N == 1 ? 1 : 0);
    if (idx >= ev.size()) throw InvalidArgument("nu_eigenvalue_oracle: ell too large for grid");
    return ev[idx];
}

} // namespace odbif
