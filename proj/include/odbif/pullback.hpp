#pragma once

// Finite-difference discretisation of the pulled-back operators on the fixed
// reference domains (m = 1) and a shift-invert eigen solver.
//
// With H the reference-domain profile and r the radial coordinate (or t in the
// slab), the operator without its zero-order term is
//   A u = lambda u_xx + (H^2 + lambda H_x^2 r^2 / H^2) u_rr
//       + (H^2 (N-1)/r + lambda H_xx r / H) u_r + (2 lambda H_x r / H) u_rx,
// and the pulled-back equation reads  top * u + A u = 0.

#include "odbif/errors.hpp"
#include "odbif/profiles.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

namespace odbif {

enum class GridKind { cylinder, slab_odd, slab_full };

/// Tensor grid of unknown nodes. Boundary nodes (Dirichlet) are not stored.
///  cylinder : r_i = (i + 1/2) dr, dr = 1/(n_r + 1/2), i = 0..n_r-1; r = 1 is node n_r
///  slab_odd : t_i = i dt, dt = 1/n_r, i = 1..n_r-1; u(0) = u(1) = 0
///  slab_full: t_i = -1 + i dt, dt = 2/n_r, i = 1..n_r-1
class TensorGrid {
public:
    TensorGrid(GridKind kind, int n_r, int n_x) : kind_(kind), n_x_(n_x)
    {
        if (n_r < 4) throw InvalidArgument("TensorGrid: n_r must be >= 4");
        if (n_x < 4) throw InvalidArgument("TensorGrid: n_x must be >= 4");
        dx_ = 2.0 * std::numbers::pi / n_x;
        switch (kind) {
        case GridKind::cylinder:
            dr_ = 1.0 / (n_r + 0.5);
            for (int i = 0; i < n_r; ++i) radial_.push_back((i + 0.5) * dr_);
            break;
        case GridKind::slab_odd:
            dr_ = 1.0 / n_r;
            for (int i = 1; i < n_r; ++i) radial_.push_back(i * dr_);
            break;
        case GridKind::slab_full:
            dr_ = 2.0 / n_r;
            for (int i = 1; i < n_r; ++i) radial_.push_back(-1.0 + i * dr_);
            break;
        }
        for (int j = 0; j < n_x; ++j) angular_.push_back(j * dx_);
        n_intervals_ = n_r;
    }

    GridKind kind() const noexcept { return kind_; }
    int n_radial() const noexcept { return static_cast<int>(radial_.size()); }
    int n_x() const noexcept { return n_x_; }
    int size() const noexcept { return n_radial() * n_x_; }
    /// The grid parameter n_r used at construction.
    int n_intervals() const noexcept { return n_intervals_; }
    double dr() const noexcept { return dr_; }
    double dx() const noexcept { return dx_; }
    const std::vector<double>& radial_nodes() const noexcept { return radial_; }
    const std::vector<double>& angular_nodes() const noexcept { return angular_; }
    int index(int i, int j) const noexcept { return i * n_x_ + j; }

private:
    GridKind kind_;
    int n_x_;
    int n_intervals_ = 0;
    double dr_ = 0.0;
    double dx_ = 0.0;
    std::vector<double> radial_;
    std::vector<double> angular_;
};

struct GridField {
    TensorGrid grid;
    Eigen::VectorXd values; // index(i, j) = i * n_x + j, unknown nodes only

    double operator()(int i, int j) const { return values[grid.index(i, j)]; }
};

namespace detail {

struct StencilCoefficients {
    double rr, r, xx, rx;
};

inline StencilCoefficients pulled_coefficients(const DomainProfile& H, double lambda, int N, double r,
                                               double x)
{
    const double h = H.value(x), hx = H.d(x), hxx = H.dd(x);
    StencilCoefficients c{};
    c.rr = h * h + lambda * hx * hx * r * r / (h * h);
    c.r = (N > 1 ? h * h * (N - 1) / r : 0.0) + lambda * hxx * r / h;
    c.xx = lambda;
    c.rx = 2.0 * lambda * hx * r / h;
    return c;
}

} // namespace detail

/// Assembles the zero-order-free operator A on `grid` (cylinder or slab kinds).
inline Eigen::SparseMatrix<double> assemble_pulled_operator(const DomainProfile& H, double lambda, int N,
                                                            const TensorGrid& grid)
{
    if (H.m() != 1) throw InvalidArgument("pullback operator: only m = 1 is supported");
    if (grid.kind() != GridKind::cylinder && N != 1)
        throw InvalidArgument("pullback operator: slab grids require N = 1");
    const int nr = grid.n_radial(), nx = grid.n_x();
    const double dr = grid.dr(), dx = grid.dx();
    const bool mirror = grid.kind() == GridKind::cylinder;

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(grid.size()) * 9);
    auto add = [&](int row, int i, int j, double v) {
        if (i < 0) {
            if (!mirror) return; // Dirichlet / odd centre: u = 0
            i = -1 - i;          // even reflection across r = 0
        }
        if (i >= nr) return; // Dirichlet boundary
        j = (j % nx + nx) % nx;
        trip.emplace_back(row, grid.index(i, j), v);
    };
    for (int i = 0; i < nr; ++i) {
        const double r = grid.radial_nodes()[i];
        for (int j = 0; j < nx; ++j) {
            const double x = grid.angular_nodes()[j];
            const auto c = detail::pulled_coefficients(H, lambda, N, r, x);
            const int row = grid.index(i, j);
            const double crr = c.rr / (dr * dr), cr = c.r / (2 * dr), cxx = c.xx / (dx * dx);
            const double crx = c.rx / (4 * dr * dx);
            add(row, i, j, -2 * crr - 2 * cxx);
            add(row, i + 1, j, crr + cr);
            add(row, i - 1, j, crr - cr);
            add(row, i, j + 1, cxx);
            add(row, i, j - 1, cxx);
            if (crx != 0.0) {
                add(row, i + 1, j + 1, crx);
                add(row, i + 1, j - 1, -crx);
                add(row, i - 1, j + 1, -crx);
                add(row, i - 1, j - 1, crx);
            }
        }
    }
    Eigen::SparseMatrix<double> A(grid.size(), grid.size());
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    return A;
}

inline Eigen::SparseMatrix<double> assemble_cylinder_operator(const DomainProfile& H, double lambda, int N,
                                                              const TensorGrid& grid)
{
    if (grid.kind() != GridKind::cylinder) throw InvalidArgument("assemble_cylinder_operator: cylinder grid expected");
    return assemble_pulled_operator(H, lambda, N, grid);
}

inline Eigen::SparseMatrix<double> assemble_slab_operator(const DomainProfile& H, double lambda,
                                                          const TensorGrid& grid)
{
    if (grid.kind() == GridKind::cylinder) throw InvalidArgument("assemble_slab_operator: slab grid expected");
    return assemble_pulled_operator(H, lambda, 1, grid);
}

/// Samples a closed-form field on the unknown nodes.
inline GridField sample_field(const SolutionField& f, const TensorGrid& grid)
{
    GridField g{grid, Eigen::VectorXd(grid.size())};
    for (int i = 0; i < grid.n_radial(); ++i)
        for (int j = 0; j < grid.n_x(); ++j) {
            const double x = grid.angular_nodes()[j];
            g.values[grid.index(i, j)] = f.value(grid.radial_nodes()[i], std::span<const double>(&x, 1));
        }
    return g;
}

struct EigenResult {
    double eigenvalue;
    GridField field;
    int iterations;
    double residual;      // ||M u - L u||_inf / ||u||_inf with M = -A
    double second_ritz;   // the other Ritz value of the final 2-block
};

/// Eigenpair of M = -A closest to `target` by block-2 shift-invert subspace
/// iteration (sparse LU). The field is normalised to max |u| = 1 with a
/// positive value at the first unknown node.
inline EigenResult solve_eigenpair_near(const Eigen::SparseMatrix<double>& A, const TensorGrid& grid,
                                        double target, const Eigen::VectorXd& seed, double tol = 1e-7,
                                        int max_iter = 200)
{
    const int n = static_cast<int>(A.rows());
    if (seed.size() != n) throw InvalidArgument("solve_eigenpair_near: seed size mismatch");
    if (seed.lpNorm<Eigen::Infinity>() == 0.0) throw InvalidArgument("solve_eigenpair_near: zero seed");

    Eigen::SparseMatrix<double> M = -A;
    Eigen::SparseMatrix<double> I(n, n);
    I.setIdentity();
    // a small offset keeps the factorisation away from an exact singularity
    const double sigma = target - 1e-6 * std::max(1.0, std::abs(target));
    Eigen::SparseMatrix<double> S = M - sigma * I;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(S);
    lu.factorize(S);
    if (lu.info() != Eigen::Success) throw NumericalError("solve_eigenpair_near: sparse LU failed");

    Eigen::MatrixXd V(n, 2);
    V.col(0) = seed;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int i = 0; i < n; ++i) V(i, 1) = uni(rng);

    double theta = target, other = target, res = 1e300;
    Eigen::VectorXd u;
    int it = 0;
    for (it = 1; it <= max_iter; ++it) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(V);
        Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, 2);
        Eigen::MatrixXd MQ = M * Q;
        Eigen::Matrix2d B = Q.transpose() * MQ;
        Eigen::EigenSolver<Eigen::Matrix2d> es(B);
        const auto ev = es.eigenvalues();
        int pick = std::abs(ev[0].real() - target) <= std::abs(ev[1].real() - target) ? 0 : 1;
        theta = ev[pick].real();
        other = ev[1 - pick].real();
        if (std::abs(ev[pick].imag()) > 0.0 && it > 5)
            throw NumericalError("solve_eigenpair_near: complex Ritz pair (nearly degenerate target)");
        Eigen::Vector2d y = es.eigenvectors().col(pick).real();
        u = Q * y;
        const double un = u.lpNorm<Eigen::Infinity>();
        res = (MQ * y - theta * u).lpNorm<Eigen::Infinity>() / un;
        if (res < tol) break;
        Eigen::MatrixXd W(n, 2);
        W.col(0) = lu.solve(Q.col(0));
        W.col(1) = lu.solve(Q.col(1));
        if (lu.info() != Eigen::Success) throw NumericalError("solve_eigenpair_near: LU solve failed");
        V = W;
    }
    if (!(res < tol)) {
        std::ostringstream msg;
        msg << "solve_eigenpair_near: no convergence after " << max_iter << " iterations (residual " << res
            << ")";
        throw NumericalError(msg.str());
    }
    if (std::abs(theta - other) < 1e-6)
        throw NumericalError("solve_eigenpair_near: two Ritz values within 1e-6 (degenerate target)");

    Eigen::Index imax;
    u.cwiseAbs().maxCoeff(&imax);
    u /= std::abs(u[imax]);
    if (u[0] < 0.0) u = -u;
    return EigenResult{theta, GridField{grid, u}, std::min(it, max_iter), res, other};
}

/// Boundary Neumann data H sqrt(1 + lambda H_x^2 / H^4) u_r(1, x) from a
/// one-sided second-order difference (u = 0 on the boundary). For slab grids
/// this is the t = +1 component; the t = -1 outward value is returned in `minus`.
struct NeumannData {
    std::vector<double> plus;
    std::vector<double> minus;
};

inline NeumannData boundary_neumann(const GridField& f, const DomainProfile& H, double lambda)
{
    const auto& g = f.grid;
    const int nr = g.n_radial(), nx = g.n_x();
    const double d = g.dr();
    NeumannData out;
    out.plus.resize(nx);
    out.minus.resize(nx);
    for (int j = 0; j < nx; ++j) {
        const double x = g.angular_nodes()[j];
        const double h = H.value(x), hx = H.d(x);
        const double metric = h * std::sqrt(1.0 + lambda * hx * hx / (h * h * h * h));
        // (3 u_B - 4 u_{B-1} + u_{B-2}) / (2 d) with u_B = 0
        const double up = (-4.0 * f(nr - 1, j) + f(nr - 2, j)) / (2.0 * d);
        out.plus[j] = metric * up;
        switch (g.kind()) {
        case GridKind::cylinder:
            out.minus[j] = out.plus[j];
            break;
        case GridKind::slab_odd:
            // u odd => u_t even => outward derivative at t = -1 is -u_t(1)
            out.minus[j] = -out.plus[j];
            break;
        case GridKind::slab_full: {
            // -u_t(-1) by the mirrored one-sided difference
            out.minus[j] = metric * (-4.0 * f(0, j) + f(1, j)) / (2.0 * d);
            break;
        }
        }
    }
    return out;
}

} // namespace odbif
