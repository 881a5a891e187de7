#include "odbif/constants.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace odbif;

namespace {
constexpr double pi = std::numbers::pi;

double tan_oracle()
{
    double a = pi / 2 + 1e-9, b = pi - 1e-12;
    for (int i = 0; i < 200; ++i) {
        const double c = 0.5 * (a + b);
        const double fc = std::sin(c) + c * std::cos(c);
        const double fa = std::sin(a) + a * std::cos(a);
        if ((fa > 0) == (fc > 0)) a = c;
        else b = c;
    }
    return 0.5 * (a + b);
}

// brute-force hit search with a tolerance expressed on k^2 instead of sigma
std::vector<std::pair<int, int>> brute_hits(double top, const std::vector<double>& radial, int first,
                                            double lambda, int kmax)
{
    std::vector<std::pair<int, int>> hits;
    for (int k = 0; k <= kmax; ++k)
        for (std::size_t l = 0; l < radial.size(); ++l)
            if (std::abs(top - lambda * k * k - radial[l]) < 1e-8)
                hits.emplace_back(k, static_cast<int>(l) + first);
    return hits;
}
} // namespace

TEST(DirichletConstants, ThreeDimensionalFirstMode)
{
    const auto c = dirichlet_constants({3, 1, 1});
    const double z = tan_oracle();
    EXPECT_NEAR(c.lambda_n, pi * pi - z * z, 1e-12);
    EXPECT_NEAR(c.lambda_n, 5.753746035394836, 1e-12);
    EXPECT_NEAR(c.mu_n, 1.715335425021428, 1e-12);
    EXPECT_NEAR(c.kappa_n, 1.0 / pi, 1e-15);
    EXPECT_NEAR(c.r_star, 2.3986967368541685, 1e-12);
    EXPECT_LT(c.c_n, 0.0);
    EXPECT_DOUBLE_EQ(c.neumann_magnitude, std::abs(c.c_n));
    // I'_{1/2}(pi) = -pi^{-1/2} J_{3/2}(pi) = -sqrt(2) pi^{-3/2}
    EXPECT_NEAR(c.c_n, -std::sqrt(2.0) / std::pow(pi, 1.5), 1e-14);
}

TEST(DirichletConstants, Identities)
{
    for (int N : {1, 2, 3, 4}) {
        double prev_mu = 1e300;
        for (int n : {1, 2, 3, 4}) {
            const auto c = dirichlet_constants({N, 2, n});
            EXPECT_GT(c.lambda_n, 0.0);
            EXPECT_GT(c.mu_n, 1.0);
            EXPECT_LT(c.mu_n, prev_mu);
            prev_mu = c.mu_n;
            EXPECT_NEAR(c.kappa_n * c.j, 1.0, 1e-15);
            EXPECT_NEAR(c.delta_n, -c.beta_n * std::sqrt(c.lambda_n), 1e-12 * std::abs(c.delta_n));
            EXPECT_NE(c.beta_n, 0.0);
            EXPECT_NEAR(c.r_star * c.r_star + c.nu1, std::pow(dirichlet_mode_zero(N, 1).value, 2), 1e-10);
            EXPECT_LT(std::abs(bessel_j(BesselOrder(radial_beta(N)), c.j)), 1e-12);
            // kappa sqrt(mu) = 1/sqrt(lambda)
            EXPECT_NEAR(c.kappa_n * std::sqrt(c.mu_n), 1.0 / std::sqrt(c.lambda_n), 1e-14);
        }
    }
    EXPECT_LT(dirichlet_constants({2, 1, 60}).mu_n - 1.0, 1e-3);
}

TEST(DirichletConstants, OneDimensionalIndexMapping)
{
    const auto c = dirichlet_constants({1, 1, 1});
    EXPECT_NEAR(c.j, 1.5 * pi, 1e-12);
    EXPECT_EQ(c.j_index, 2);
    EXPECT_NEAR(c.lambda_n, 1.25 * pi * pi, 1e-10);
    EXPECT_NEAR(c.mu_n, 1.8, 1e-12);
    EXPECT_NEAR(c.c_n, std::sqrt(2.0 / pi), 1e-14);
    EXPECT_NEAR(dirichlet_constants({1, 1, 3}).j, 3.5 * pi, 1e-12);
}

TEST(DirichletConstants, InvalidDims)
{
    EXPECT_THROW(dirichlet_constants({0, 1, 1}), InvalidArgument);
    EXPECT_THROW(dirichlet_constants({1, 0, 1}), InvalidArgument);
    EXPECT_THROW(dirichlet_constants({1, 1, 0}), InvalidArgument);
}

TEST(ClassicalRadii, RhoCoincidesWithFirstRobinRoot)
{
    for (int N : {1, 2, 3, 4, 5}) {
        const auto cr = classical_radii(N);
        ASSERT_TRUE(cr.rho.has_value()) << cr.t_star_note;
        const double j = dirichlet_mode_zero(N, 1).value;
        EXPECT_GT(*cr.rho, 0.0);
        EXPECT_LT(*cr.rho, j);
        EXPECT_NEAR(*cr.rho, nu_eigenvalue(N, 1).sqrt_value, 1e-10);
        EXPECT_NEAR(*cr.t_star, 2 * pi / cr.r_star, 1e-9);
    }
    EXPECT_NEAR(classical_radii(3).r_star, 2.3986967368541685, 1e-12);
}

TEST(SlabConstants, ClosedForms)
{
    const auto c = slab_constants(1);
    EXPECT_NEAR(c.d_n, 4.0 / 3.0, 1e-14 * 4.0 / 3.0);
    EXPECT_NEAR(c.a_n, 1.0 / pi, 1e-14 / pi);
    EXPECT_NEAR(c.b_n, 2.0 / (pi * std::sqrt(3.0)), 1e-14);
    EXPECT_NEAR(c.gamma_n, 0.75 * pi * pi, 1e-14 * 7.4);
    EXPECT_NEAR(c.gamma_n, 7.402203300817, 1e-9);
    EXPECT_DOUBLE_EQ(slab_constants(2).d_n, 16.0 / 15.0);
    double prev = c.d_n;
    for (int n = 2; n < 50; ++n) {
        const auto cn = slab_constants(n);
        EXPECT_LT(cn.d_n, prev);
        EXPECT_GT(cn.d_n, 1.0);
        EXPECT_NEAR(cn.b_n * cn.b_n * cn.gamma_n, 1.0, 4e-16);
        prev = cn.d_n;
    }
    EXPECT_THROW(slab_constants(0), InvalidArgument);
}

TEST(ModeTable, UniqueKernelAtLambdaN)
{
    for (int N : {1, 2, 3, 4}) {
        for (int n : {1, 2, 3}) {
            const auto c = dirichlet_constants({N, 1, n});
            const auto t = mode_table({N, 1, n}, c.lambda_n, 200, 200);
            ASSERT_EQ(t.kernel_hits.size(), 1u) << "N=" << N << " n=" << n;
            EXPECT_EQ(t.kernel_hits[0], std::make_pair(1, 1));
            EXPECT_NEAR(t.sigma(1, 0), 0.0, 1e-10);
            const auto p = mode_table({N, 1, n}, c.lambda_n + 0.37, 200, 200);
            EXPECT_TRUE(p.kernel_hits.empty());
        }
    }
}

TEST(ModeTable, AgreesWithBruteForce)
{
    const auto c = dirichlet_constants({3, 1, 2});
    const auto nus = nu_eigenvalues(3, 50);
    std::vector<double> radial;
    for (const auto& v : nus) radial.push_back(v.value);
    for (double lam : {c.lambda_n, c.lambda_n + 0.37, 1.0}) {
        const auto t = mode_table({3, 1, 2}, lam, 50, 50);
        EXPECT_EQ(t.kernel_hits, brute_hits(c.j * c.j, radial, 1, lam, 50));
    }
}

TEST(ModeTable, SigmaGrowsAlongTable)
{
    const auto c = dirichlet_constants({2, 1, 1});
    const auto t = mode_table({2, 1, 1}, c.lambda_n, 200, 200);
    EXPECT_GT(t.sigma(200, 199), t.sigma(100, 99));
    EXPECT_GT(t.sigma(100, 99), t.sigma(10, 9));
    EXPECT_GT(t.sigma(200, 199), 1e5);
}

TEST(SlabModeTable, UniqueKernelAtGammaN)
{
    for (int n : {1, 2, 3}) {
        const double g = slab_constants(n).gamma_n;
        const auto t = slab_mode_table(n, g, 200, 200);
        ASSERT_EQ(t.kernel_hits.size(), 1u) << n;
        EXPECT_EQ(t.kernel_hits[0], std::make_pair(1, 0));
        EXPECT_NEAR(t.sigma(1, 0), 0.0, 1e-12);
        EXPECT_TRUE(slab_mode_table(n, g + 0.37, 200, 200).kernel_hits.empty());
    }
    EXPECT_THROW(slab_mode_table(1, 1.0, 1, 5), InvalidArgument);
    EXPECT_THROW(mode_table({1, 1, 1}, 1.0, 5, 5, 0.0), InvalidArgument);
}
