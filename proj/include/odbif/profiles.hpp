#pragma once

// Bifurcating boundary profiles h(x) and first-order solution fields on the
// fixed reference domains (unit ball x torus, slab x torus).

#include "odbif/constants.hpp"
#include "odbif/errors.hpp"
#include "odbif/radial_expr.hpp"
#include "odbif/radial_spectra.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <sstream>
#include <vector>

namespace odbif {

enum class ProblemKind { dirichlet, slab };

inline const char* to_string(ProblemKind k) { return k == ProblemKind::dirichlet ? "dirichlet" : "slab"; }

/// omega_k(x) = cos(k x_1) + ... + cos(k x_m).
struct AngularMode {
    int m = 1;
    int k = 1;

    double value(std::span<const double> x) const
    {
        // Neumaier compensated sum
        double sum = 0.0, comp = 0.0;
        for (int j = 0; j < m; ++j) {
            const double t = std::cos(k * x[j]);
            const double s = sum + t;
            comp += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
            sum = s;
        }
        return sum + comp;
    }
    double d(std::span<const double> x, int j) const { return -k * std::sin(k * x[j]); }
    double dd(std::span<const double> x, int j) const { return -double(k) * k * std::cos(k * x[j]); }
    double laplacian(std::span<const double> x) const { return -double(k) * k * value(x); }
};

/// h(x) = const_term + s * amplitude * omega_k(x), required positive.
class DomainProfile {
public:
    DomainProfile(ProblemKind kind, int m, double const_term, double amplitude, double s, int k = 1,
                  int samples_per_axis = 256)
        : kind_(kind), mode_{m, k}, const_term_(const_term), amplitude_(amplitude), s_(s)
    {
        if (m < 1) throw InvalidArgument("DomainProfile: m must be >= 1");
        if (k < 0) throw InvalidArgument("DomainProfile: mode k must be >= 0");
        if (!(const_term > 0.0)) throw InvalidArgument("DomainProfile: const_term must be positive");
        if (!(min_value() > 0.0)) {
            std::ostringstream msg;
            msg << "DomainProfile: min h = " << min_value() << " <= 0 (s = " << s << ")";
            throw InvalidArgument(msg.str());
        }
        // tensor samples on [0, 2pi)^m, capped so that large m stays cheap
        int per_axis = samples_per_axis;
        while (m > 1 && std::pow(double(per_axis), m) > 65536.0) per_axis /= 2;
        per_axis_ = std::max(per_axis, 1);
        std::size_t total = 1;
        for (int j = 0; j < m; ++j) total *= static_cast<std::size_t>(per_axis_);
        samples_.reserve(total);
        std::vector<double> x(m);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rem = idx;
            for (int j = m - 1; j >= 0; --j) {
                x[j] = 2.0 * std::numbers::pi * double(rem % per_axis_) / per_axis_;
                rem /= per_axis_;
            }
            samples_.push_back(value(x));
        }
    }

    ProblemKind kind() const noexcept { return kind_; }
    int m() const noexcept { return mode_.m; }
    int k() const noexcept { return mode_.k; }
    double const_term() const noexcept { return const_term_; }
    double amplitude() const noexcept { return amplitude_; }
    double s() const noexcept { return s_; }
    const AngularMode& mode() const noexcept { return mode_; }
    /// Cosine coefficient in front of omega_k: s * amplitude.
    double coefficient() const noexcept { return s_ * amplitude_; }
    double min_value() const noexcept
    {
        if (mode_.k == 0) return const_term_ + coefficient() * mode_.m;
        return const_term_ - std::abs(coefficient()) * mode_.m;
    }
    int samples_per_axis() const noexcept { return per_axis_; }
    const std::vector<double>& samples() const noexcept { return samples_; }

    double value(std::span<const double> x) const { return const_term_ + coefficient() * mode_.value(x); }
    double d(std::span<const double> x, int j) const { return coefficient() * mode_.d(x, j); }
    double grad_sq(std::span<const double> x) const
    {
        double g = 0.0;
        for (int j = 0; j < mode_.m; ++j) g += d(x, j) * d(x, j);
        return g;
    }
    double laplacian(std::span<const double> x) const { return coefficient() * mode_.laplacian(x); }

    // m = 1 conveniences
    double value(double x) const { return value(std::span<const double>(&x, 1)); }
    double d(double x) const { return d(std::span<const double>(&x, 1), 0); }
    double dd(double x) const { return coefficient() * mode_.dd(std::span<const double>(&x, 1), 0); }

    /// The same profile rescaled by c (c h(x)).
    DomainProfile scaled(double c) const
    {
        return DomainProfile(kind_, mode_.m, c * const_term_, c * amplitude_, s_, mode_.k, per_axis_);
    }

private:
    ProblemKind kind_;
    AngularMode mode_;
    double const_term_;
    double amplitude_;
    double s_;
    int per_axis_ = 1;
    std::vector<double> samples_;
};

/// u(tau, x) = f0(tau) + f1(tau) omega_k(x), with tau the radial coordinate
/// (cylinder, f0 and f1 even) or t in (-1, 1) (slab, f0 and f1 odd).
class SolutionField {
public:
    SolutionField(ProblemKind kind, ProblemDims dims, double s, RadialExpr f0, RadialExpr f1,
                  AngularMode mode)
        : kind_(kind), dims_(dims), s_(s), mode_(mode), f0_(std::move(f0)), f1_(std::move(f1))
    {
        d0_ = f0_.derivative();
        dd0_ = d0_.derivative();
        d1_ = f1_.derivative();
        dd1_ = d1_.derivative();
    }

    ProblemKind kind() const noexcept { return kind_; }
    const ProblemDims& dims() const noexcept { return dims_; }
    double s() const noexcept { return s_; }
    const AngularMode& mode() const noexcept { return mode_; }
    bool odd_in_tau() const noexcept { return kind_ == ProblemKind::slab; }
    const RadialExpr& f0() const noexcept { return f0_; }
    const RadialExpr& f1() const noexcept { return f1_; }
    const RadialExpr& f0_d() const noexcept { return d0_; }
    const RadialExpr& f1_d() const noexcept { return d1_; }
    const RadialExpr& f0_dd() const noexcept { return dd0_; }
    const RadialExpr& f1_dd() const noexcept { return dd1_; }

    double value(double tau, std::span<const double> x) const { return f0_(tau) + f1_(tau) * mode_.value(x); }
    double d_tau(double tau, std::span<const double> x) const { return d0_(tau) + d1_(tau) * mode_.value(x); }
    double d_tautau(double tau, std::span<const double> x) const
    {
        return dd0_(tau) + dd1_(tau) * mode_.value(x);
    }
    double d_x(double tau, std::span<const double> x, int j) const { return f1_(tau) * mode_.d(x, j); }
    double d_xx(double tau, std::span<const double> x, int i, int j) const
    {
        return i == j ? f1_(tau) * mode_.dd(x, j) : 0.0;
    }
    double d_x_tau(double tau, std::span<const double> x, int j) const { return d1_(tau) * mode_.d(x, j); }

private:
    ProblemKind kind_;
    ProblemDims dims_;
    double s_;
    AngularMode mode_;
    RadialExpr f0_, f1_, d0_, dd0_, d1_, dd1_;
};

/// kappa_n sqrt(mu_n) + s beta_n theta(x), with mu frozen at mu_n.
inline DomainProfile cylinder_profile(const ProblemDims& dims, double s)
{
    const auto c = dirichlet_constants(dims);
    return DomainProfile(ProblemKind::dirichlet, dims.m, c.kappa_n * std::sqrt(c.mu_n), c.beta_n, s);
}

/// a_n sqrt(d_n) + s b_n theta(x).
inline DomainProfile slab_profile(int n, int m, double s)
{
    const auto c = slab_constants(n);
    return DomainProfile(ProblemKind::slab, m, c.a_n * std::sqrt(c.d_n), c.b_n, s);
}

/// The profile seen by the pulled-back problem on the unit reference domain:
/// 1 + h = sqrt(lambda) * h_physical.
inline DomainProfile pulled_back_profile(const DomainProfile& p, double lambda)
{
    return p.scaled(std::sqrt(lambda));
}

/// U_n(r) = I_{N/2-1}(j r).
inline RadialExpr dirichlet_base(int N, double j) { return RadialExpr::bessel(radial_beta(N), j); }

/// v_n(t) = (-1)^n sin(n pi t) / (n pi), normalised so that v_n'(1) = 1.
inline RadialExpr slab_base(int n)
{
    const double sign = n % 2 ? -1.0 : 1.0;
    return RadialExpr::sine(n * std::numbers::pi, sign / (n * std::numbers::pi));
}

/// U_n(|tau|) + s [psi_{nu_1}(|tau|) + delta_n |tau| U_n'(|tau|)] theta(x).
inline SolutionField cylinder_first_order_field(const ProblemDims& dims, double s)
{
    dims.validate();
    const auto c = dirichlet_constants(dims);
    const auto un = dirichlet_base(dims.N, c.j);
    const auto psi = RadialExpr::bessel(radial_beta(dims.N), std::sqrt(c.nu1));
    const auto f1 = (psi + c.delta_n * un.derivative().times_r()).scaled(s);
    return SolutionField(ProblemKind::dirichlet, dims, s, un, f1, AngularMode{dims.m, 1});
}

/// v_n(t) + s [sin(pi t/2) - t (-1)^n cos(n pi t)] theta(x).
inline SolutionField slab_first_order_field(int n, int m, double s)
{
    if (n < 1 || m < 1) throw InvalidArgument("slab_first_order_field: n, m must be >= 1");
    const auto vn = slab_base(n);
    const auto f1 = (RadialExpr::sine(std::numbers::pi / 2.0) - vn.derivative().times_r()).scaled(s);
    return SolutionField(ProblemKind::slab, ProblemDims{1, m, n}, s, vn, f1, AngularMode{m, 1});
}

/// Unit outer normal of {|t| < 1/h(x)} at the boundary point over x, on the
/// side sign(side) of the t-axis: (side, grad h / h^2) / sqrt(1 + |grad h|^2 / h^4).
inline std::vector<double> normal_vector(const DomainProfile& p, std::span<const double> x, int side = 1)
{
    const double h = p.value(x);
    std::vector<double> nu(1 + p.m());
    nu[0] = side >= 0 ? 1.0 : -1.0;
    double sq = 1.0;
    for (int j = 0; j < p.m(); ++j) {
        nu[1 + j] = p.d(x, j) / (h * h);
        sq += nu[1 + j] * nu[1 + j];
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& v : nu) v *= inv;
    return nu;
}

} // namespace odbif
