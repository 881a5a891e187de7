#include "odbif/pullback.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace odbif;

namespace {
constexpr double pi = std::numbers::pi;

// A u written out from the nondivergence form of the pulled-back operator
double analytic_A(const SolutionField& f, const DomainProfile& H, double lambda, int N, double r, double x)
{
    std::span<const double> X(&x, 1);
    const double h = H.value(x), hx = H.d(x), hxx = H.dd(x);
    const double ur = f.d_tau(r, X), urr = f.d_tautau(r, X);
    double a = lambda * f.d_xx(r, X, 0, 0) + (h * h + lambda * hx * hx * r * r / (h * h)) * urr;
    if (N > 1) a += h * h * (N - 1) / r * ur;
    a += lambda * hxx * r / h * ur + 2 * lambda * hx * r / h * f.d_x_tau(r, X, 0);
    return a;
}

double max_operator_error(GridKind kind, int N, int nr, int nx)
{
    const double s = 0.05;
    const bool slab = kind != GridKind::cylinder;
    const ProblemDims dims{N, 1, 1};
    const double lambda = slab ? slab_constants(1).gamma_n : dirichlet_constants(dims).lambda_n;
    const auto H = slab ? pulled_back_profile(slab_profile(1, 1, s), lambda)
                        : pulled_back_profile(cylinder_profile(dims, s), lambda);
    const auto f = slab ? slab_first_order_field(1, 1, s) : cylinder_first_order_field(dims, s);
    const TensorGrid g(kind, nr, nx);
    const auto A = assemble_pulled_operator(H, lambda, N, g);
    const Eigen::VectorXd Au = A * sample_field(f, g).values;
    double err = 0.0;
    for (int i = 0; i < g.n_radial(); ++i)
        for (int j = 0; j < g.n_x(); ++j)
            err = std::max(err, std::abs(Au[g.index(i, j)] -
                                         analytic_A(f, H, lambda, N, g.radial_nodes()[i], g.angular_nodes()[j])));
    return err;
}
} // namespace

TEST(TensorGrid, NodeLayout)
{
    const TensorGrid c(GridKind::cylinder, 10, 8);
    EXPECT_EQ(c.n_radial(), 10);
    EXPECT_NEAR(c.radial_nodes().back() + c.dr(), 1.0, 1e-15);
    EXPECT_NEAR(c.radial_nodes().front(), 0.5 * c.dr(), 1e-15);
    const TensorGrid s(GridKind::slab_odd, 10, 8);
    EXPECT_EQ(s.n_radial(), 9);
    EXPECT_NEAR(s.dr(), 0.1, 1e-15);
    const TensorGrid f(GridKind::slab_full, 10, 8);
    EXPECT_NEAR(f.radial_nodes().front(), -0.8, 1e-15);
    EXPECT_EQ(f.size(), 9 * 8);
    EXPECT_THROW(TensorGrid(GridKind::cylinder, 3, 8), InvalidArgument);
}

TEST(PulledOperator, SecondOrderConsistentOnClosedFormFields)
{
    for (auto [kind, N] : {std::pair{GridKind::cylinder, 1}, std::pair{GridKind::cylinder, 3},
                           std::pair{GridKind::slab_odd, 1}, std::pair{GridKind::slab_full, 1}}) {
        const double e1 = max_operator_error(kind, N, 32, 32);
        const double e2 = max_operator_error(kind, N, 64, 64);
        EXPECT_GT(e1 / e2, 3.3) << int(kind) << " N=" << N;
        EXPECT_LT(e1 / e2, 4.7) << int(kind) << " N=" << N;
    }
}

TEST(PulledOperator, AffineInLambda)
{
    const auto H = DomainProfile(ProblemKind::dirichlet, 1, 1.0, 0.1, 1.0);
    const TensorGrid g(GridKind::cylinder, 12, 8);
    const Eigen::SparseMatrix<double> a0 = assemble_pulled_operator(H, 0.0, 2, g);
    const Eigen::SparseMatrix<double> a1 = assemble_pulled_operator(H, 1.5, 2, g);
    const Eigen::SparseMatrix<double> a2 = assemble_pulled_operator(H, 3.0, 2, g);
    EXPECT_LT(Eigen::MatrixXd(a2 - 2 * a1 + a0).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(PulledOperator, PreservesParity)
{
    // odd-in-t fields on the full slab map to odd fields
    const auto H = pulled_back_profile(slab_profile(1, 1, 0.1), slab_constants(1).gamma_n);
    const TensorGrid g(GridKind::slab_full, 16, 16);
    const auto A = assemble_slab_operator(H, slab_constants(1).gamma_n, g);
    const Eigen::VectorXd Au = A * sample_field(slab_first_order_field(1, 1, 0.1), g).values;
    const int nr = g.n_radial();
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < g.n_x(); ++j)
            EXPECT_NEAR(Au[g.index(i, j)], -Au[g.index(nr - 1 - i, j)], 1e-11);
    EXPECT_THROW(assemble_slab_operator(H, 1.0, TensorGrid(GridKind::cylinder, 8, 8)), InvalidArgument);
    EXPECT_THROW(assemble_pulled_operator(H, 1.0, 2, g), InvalidArgument);
}

TEST(EigenSolver, FlatCylinderAndSlab)
{
    // N = 1 cylinder: -u'' = mu u on (-1, 1), even, mu = (3 pi/2)^2
    const auto c = dirichlet_constants({1, 1, 1});
    const auto H = pulled_back_profile(cylinder_profile({1, 1, 1}, 0.0), c.lambda_n);
    double prev = 0.0;
    for (int nr : {32, 64, 128}) {
        const TensorGrid g(GridKind::cylinder, nr, 8);
        Eigen::VectorXd seed(g.size());
        for (int i = 0; i < g.n_radial(); ++i)
            for (int j = 0; j < 8; ++j) seed[g.index(i, j)] = std::cos(1.5 * pi * g.radial_nodes()[i]);
        const auto r = solve_eigenpair_near(assemble_cylinder_operator(H, c.lambda_n, 1, g), g, c.j * c.j, seed);
        const double err = std::abs(r.eigenvalue - 2.25 * pi * pi);
        EXPECT_LT(err, 0.1);
        if (prev > 0) {
            EXPECT_GT(prev / err, 3.5);
            EXPECT_LT(prev / err, 4.5);
        }
        prev = err;
        EXPECT_NEAR(r.field.values.cwiseAbs().maxCoeff(), 1.0, 1e-15);
        EXPECT_GT(r.field.values[0], 0.0);
        // flat: Neumann data independent of x
        const auto nd = boundary_neumann(r.field, H, c.lambda_n);
        for (double v : nd.plus) EXPECT_NEAR(v, nd.plus[0], 1e-8);
    }
}

TEST(EigenSolver, FlatSlabOddHalfDomain)
{
    const double g1 = slab_constants(1).gamma_n;
    const auto H = pulled_back_profile(slab_profile(1, 1, 0.0), g1);
    const TensorGrid g(GridKind::slab_odd, 64, 8);
    Eigen::VectorXd seed = sample_field(slab_first_order_field(1, 1, 0.0), g).values;
    const auto r = solve_eigenpair_near(assemble_slab_operator(H, g1, g), g, pi * pi, seed);
    // second-order finite differences: (2/dt^2)(1 - cos(pi dt))
    const double dt = 1.0 / 64;
    EXPECT_NEAR(r.eigenvalue, 2.0 / (dt * dt) * (1.0 - std::cos(pi * dt)), 1e-8);
    const auto nd = boundary_neumann(r.field, H, g1);
    for (int j = 0; j < 8; ++j) EXPECT_DOUBLE_EQ(nd.minus[j], -nd.plus[j]);
    EXPECT_THROW(solve_eigenpair_near(assemble_slab_operator(H, g1, g), g, pi * pi, Eigen::VectorXd(3)),
                 InvalidArgument);
}

TEST(BoundaryNeumann, FullSlabOddFieldHasOppositeSigns)
{
    const auto H = pulled_back_profile(slab_profile(1, 1, 0.1), slab_constants(1).gamma_n);
    const TensorGrid g(GridKind::slab_full, 64, 16);
    const auto f = sample_field(slab_first_order_field(1, 1, 0.1), g);
    const auto nd = boundary_neumann(f, H, slab_constants(1).gamma_n);
    for (int j = 0; j < 16; ++j) EXPECT_NEAR(nd.plus[j] + nd.minus[j], 0.0, 1e-12);
}
