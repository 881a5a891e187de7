#pragma once

// Closed-form nonlinear residuals of the first-order branches, linearisation
// and pairing checks, and eigen-verification on perturbed profiles.

#include "odbif/constants.hpp"
#include "odbif/errors.hpp"
#include "odbif/profiles.hpp"
#include "odbif/pullback.hpp"
#include "odbif/radial_expr.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace odbif {

/// Everything the pulled-back map G needs about one problem instance.
struct BranchSetup {
    ProblemKind kind;
    ProblemDims dims;
    double top;           // j^2 (cylinder) or n^2 pi^2 (slab)
    double lambda;        // lambda_n or gamma_n
    RadialExpr base;      // U_n or v_n
    double base_flux;     // base'(1)
    double metric_weight; // lambda, or 1 for the nonconstant-Neumann variant
    RadialExpr kernel;    // psi_{nu_1} or sin(pi t / 2)
    std::string label;
};

inline BranchSetup dirichlet_setup(const ProblemDims& dims, bool nonconstant_neumann = false)
{
    const auto c = dirichlet_constants(dims);
    BranchSetup s{ProblemKind::dirichlet, dims, c.j * c.j, c.lambda_n, dirichlet_base(dims.N, c.j), 0.0,
                  nonconstant_neumann ? 1.0 : c.lambda_n,
                  RadialExpr::bessel(radial_beta(dims.N), std::sqrt(c.nu1)),
                  nonconstant_neumann ? "dirichlet-nonconstant-neumann" : "dirichlet"};
    s.base_flux = s.base.derivative()(1.0);
    return s;
}

inline BranchSetup slab_setup(int n, int m = 1)
{
    const auto c = slab_constants(n);
    const double pi = std::numbers::pi;
    BranchSetup s{ProblemKind::slab, ProblemDims{1, m, n}, double(n) * n * pi * pi, c.gamma_n, slab_base(n), 0.0,
                  c.gamma_n, RadialExpr::sine(pi / 2.0), "slab"};
    s.base_flux = s.base.derivative()(1.0);
    return s;
}

/// A direction v(tau, x) = profile(tau) * omega_k(x).
struct Probe {
    RadialExpr profile;
    int k = 1;
    std::string label;
};

enum class ProbeKind { kernel, negative_control };

inline Probe make_probe(const BranchSetup& s, ProbeKind kind)
{
    if (kind == ProbeKind::kernel) return Probe{s.kernel, 1, "kernel"};
    return Probe{s.kernel, 2, "negative-control"};
}

/// The field base + M(s v) and the profile 1 + h_{s v} on the reference domain.
struct BranchState {
    SolutionField field;
    DomainProfile H;
};

inline BranchState branch_state(const BranchSetup& su, const Probe& p, double s)
{
    const double p1 = p.profile(1.0);
    const double c = p1 / su.base_flux; // h_v per unit s
    auto f1 = (p.profile - c * su.base.derivative().times_r()).scaled(s);
    AngularMode mode{su.dims.m, p.k};
    SolutionField field(su.kind, su.dims, s, su.base, f1, mode);
    DomainProfile H(su.kind, su.dims.m, 1.0, c, s, p.k, 8);
    return BranchState{std::move(field), std::move(H)};
}

struct SampleGrid {
    int n_r = 201;
    int n_x = 256;
};

namespace detail {

// tensor points of the torus, per-axis count capped so that the total stays <= 2^16
inline std::vector<std::vector<double>> torus_points(int m, int n_x)
{
    int per = n_x;
    while (m > 1 && std::pow(double(per), m) > 65536.0) per /= 2;
    per = std::max(per, 2);
    std::size_t total = 1;
    for (int j = 0; j < m; ++j) total *= static_cast<std::size_t>(per);
    std::vector<std::vector<double>> pts(total, std::vector<double>(m));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int j = m - 1; j >= 0; --j) {
            pts[idx][j] = 2.0 * std::numbers::pi * double(rem % per) / per;
            rem /= per;
        }
    }
    return pts;
}

inline std::vector<double> radial_samples(ProblemKind kind, int n_r)
{
    std::vector<double> r(n_r);
    const double lo = kind == ProblemKind::slab ? -1.0 : 0.0;
    for (int i = 0; i < n_r; ++i) r[i] = lo + (1.0 - lo) * i / (n_r - 1);
    return r;
}

struct RadialValues {
    double f, d, dd, d_over_r;
};

inline RadialValues radial_values(const RadialExpr& f, const RadialExpr& d, const RadialExpr& dd, double r)
{
    RadialValues v{f(r), d(r), dd(r), 0.0};
    v.d_over_r = r == 0.0 ? v.dd : v.d / r; // even profiles: f'(r)/r -> f''(0)
    return v;
}

} // namespace detail

namespace detail {

// Runs body(i) for i < count on up to `threads` workers. Results must be
// written by index; the lowest-index exception is rethrown.
template <class F>
void parallel_for(std::size_t count, int threads, F&& body)
{
    const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
    if (t <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += t) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

/// Pointwise values of the two components of G on the sample grid.
struct PointwiseResidual {
    std::vector<double> interior; // row-major over (radial sample, torus point)
    std::vector<double> boundary; // over torus points, at tau = 1
};

inline PointwiseResidual pointwise_residual(const BranchSetup& su, const BranchState& st, const SampleGrid& g)
{
    if (g.n_r < 3 || g.n_x < 4) throw InvalidArgument("sample grid too small");
    const int N = su.dims.N;
    const auto pts = detail::torus_points(su.dims.m, g.n_x);
    const auto rs = detail::radial_samples(su.kind, g.n_r);
    const auto& W = st.field;
    const auto& H = st.H;
    const double lam = su.lambda;

    // angular quantities per torus point
    const std::size_t P = pts.size();
    std::vector<double> om(P), hv(P), grad2(P), lap(P), gdot(P), lapom(P);
    for (std::size_t q = 0; q < P; ++q) {
        const auto& x = pts[q];
        om[q] = W.mode().value(x);
        lapom[q] = W.mode().laplacian(x);
        hv[q] = H.value(x);
        grad2[q] = H.grad_sq(x);
        lap[q] = H.laplacian(x);
        double gd = 0.0;
        for (int j = 0; j < su.dims.m; ++j) gd += H.d(x, j) * W.mode().d(x, j);
        gdot[q] = gd; // grad H . grad omega
    }

    PointwiseResidual out;
    out.interior.resize(rs.size() * P);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double r = rs[i];
        const auto a = detail::radial_values(W.f0(), W.f0_d(), W.f0_dd(), r);
        const auto b = detail::radial_values(W.f1(), W.f1_d(), W.f1_dd(), r);
        for (std::size_t q = 0; q < P; ++q) {
            const double u = a.f + b.f * om[q];
            const double ur = a.d + b.d * om[q];
            const double urr = a.dd + b.dd * om[q];
            const double ur_r = a.d_over_r + b.d_over_r * om[q];
            const double h = hv[q];
            double L = su.top * u + lam * b.f * lapom[q] + h * h * (urr + (N - 1) * ur_r);
            L += lam * grad2[q] / (h * h) * r * r * urr;
            L += 2.0 * lam / h * gdot[q] * r * b.d;
            L += lam * lap[q] / h * r * ur;
            out.interior[i * P + q] = L;
        }
    }
    out.boundary.resize(P);
    const double a1 = W.f0_d()(1.0), b1 = W.f1_d()(1.0);
    for (std::size_t q = 0; q < P; ++q) {
        const double h = hv[q];
        const double metric = h * std::sqrt(1.0 + su.metric_weight * grad2[q] / (h * h * h * h));
        out.boundary[q] = metric * (a1 + b1 * om[q]) - su.base_flux;
    }
    return out;
}

inline double sup_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

/// Least-squares slope of log y against log x; needs at least 3 positive pairs.
inline double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size()) throw InvalidArgument("fit_loglog_slope: size mismatch");
    if (x.size() < 3) throw InvalidArgument("fit_loglog_slope: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw NumericalError("fit_loglog_slope: nonpositive value");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (!(std::abs(den) > 0.0)) throw NumericalError("fit_loglog_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / den;
}

struct ResidualReport {
    ProblemKind kind;
    ProblemDims dims;
    std::string variant;
    std::string probe;
    std::vector<double> s_values;
    std::vector<double> interior_sup;
    std::vector<double> boundary_sup;
    double interior_slope = 0.0;
    double boundary_slope = 0.0;
    double fitted_slope = 0.0; // slope of max(interior, boundary)
    SampleGrid grid;
};

inline void check_s_values(const std::vector<double>& s)
{
    if (s.size() < 3) throw InvalidArgument("residual sweep: need at least 3 s-values");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] > 0.0)) throw InvalidArgument("residual sweep: s-values must be positive");
        if (i > 0 && !(s[i] < s[i - 1])) throw InvalidArgument("residual sweep: s-values must strictly decrease");
    }
}

/// Sweeps s for the branch through `probe` and fits residual slopes.
inline ResidualReport branch_residual(const BranchSetup& su, const Probe& probe, const std::vector<double>& s_values,
                                      const SampleGrid& grid = {}, int threads = 1)
{
    check_s_values(s_values);
    ResidualReport rep{su.kind, su.dims, su.label, probe.label, s_values, {}, {}, 0, 0, 0, grid};
    for (double s : s_values) {
        const double lo = branch_state(su, probe, s).H.min_value();
        if (lo < 0.5) {
            std::ostringstream msg;
            msg << "residual sweep: min(1 + h_u) = " << lo << " < 0.5 at s = " << s;
            throw InvalidArgument(msg.str());
        }
    }
    const std::size_t n = s_values.size();
    rep.interior_sup.assign(n, 0.0);
    rep.boundary_sup.assign(n, 0.0);
    detail::parallel_for(n, threads, [&](std::size_t i) {
        const auto pr = pointwise_residual(su, branch_state(su, probe, s_values[i]), grid);
        rep.interior_sup[i] = sup_abs(pr.interior);
        rep.boundary_sup[i] = sup_abs(pr.boundary);
    });
    std::vector<double> combined(n);
    for (std::size_t i = 0; i < n; ++i) combined[i] = std::max(rep.interior_sup[i], rep.boundary_sup[i]);
    rep.interior_slope = fit_loglog_slope(s_values, rep.interior_sup);
    rep.boundary_slope = fit_loglog_slope(s_values, rep.boundary_sup);
    rep.fitted_slope = fit_loglog_slope(s_values, combined);
    return rep;
}

inline ResidualReport dirichlet_branch_residual(const ProblemDims& dims, const std::vector<double>& s_values,
                                                const SampleGrid& grid = {}, ProbeKind probe = ProbeKind::kernel, int threads = 1)
{
    const auto su = dirichlet_setup(dims);
    return branch_residual(su, make_probe(su, probe), s_values, grid, threads);
}

inline ResidualReport slab_branch_residual(int n, int m, const std::vector<double>& s_values,
                                           const SampleGrid& grid = {}, ProbeKind probe = ProbeKind::kernel, int threads = 1)
{
    const auto su = slab_setup(n, m);
    return branch_residual(su, make_probe(su, probe), s_values, grid, threads);
}

/// Same branch, boundary condition with the lambda-free metric factor.
inline ResidualReport nonconstant_neumann_residual(const ProblemDims& dims, const std::vector<double>& s_values,
                                                   const SampleGrid& grid = {}, ProbeKind probe = ProbeKind::kernel, int threads = 1)
{
    const auto su = dirichlet_setup(dims, true);
    return branch_residual(su, make_probe(su, probe), s_values, grid, threads);
}

/// DG(0) v in closed form on the sample grid.
inline PointwiseResidual linearized_action(const BranchSetup& su, const Probe& p, const SampleGrid& g)
{
    const int N = su.dims.N;
    const auto pts = detail::torus_points(su.dims.m, g.n_x);
    const auto rs = detail::radial_samples(su.kind, g.n_r);
    const AngularMode mode{su.dims.m, p.k};
    const auto d = p.profile.derivative();
    const auto dd = d.derivative();
    const double k2 = double(p.k) * p.k;
    PointwiseResidual out;
    out.interior.resize(rs.size() * pts.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto v = detail::radial_values(p.profile, d, dd, rs[i]);
        const double radial = su.top * v.f + v.dd + (N - 1) * v.d_over_r - su.lambda * k2 * v.f;
        for (std::size_t q = 0; q < pts.size(); ++q) out.interior[i * pts.size() + q] = radial * mode.value(pts[q]);
    }
    const double bnd = d(1.0) + (N - 1) * p.profile(1.0);
    out.boundary.resize(pts.size());
    for (std::size_t q = 0; q < pts.size(); ++q) out.boundary[q] = bnd * mode.value(pts[q]);
    return out;
}

struct LinearizationReport {
    std::string probe;
    std::vector<double> eps;
    std::vector<double> interior_error; // sup |(G(eps v) - G(0))/eps - DG(0) v|
    std::vector<double> boundary_error;
    double dg_interior_sup = 0.0;
    double dg_boundary_sup = 0.0;
    double error_slope = 0.0; // of max(interior, boundary) error vs eps
};

inline LinearizationReport linearization_check(const BranchSetup& su, const Probe& p, const std::vector<double>& eps,
                                               const SampleGrid& g = {})
{
    const auto dg = linearized_action(su, p, g);
    const auto g0 = pointwise_residual(su, branch_state(su, p, 0.0), g);
    LinearizationReport rep{p.label, eps, {}, {}, sup_abs(dg.interior), sup_abs(dg.boundary), 0.0};
    std::vector<double> combined;
    for (double e : eps) {
        const auto ge = pointwise_residual(su, branch_state(su, p, e), g);
        double ei = 0.0, eb = 0.0;
        for (std::size_t q = 0; q < ge.interior.size(); ++q)
            ei = std::max(ei, std::abs((ge.interior[q] - g0.interior[q]) / e - dg.interior[q]));
        for (std::size_t q = 0; q < ge.boundary.size(); ++q)
            eb = std::max(eb, std::abs((ge.boundary[q] - g0.boundary[q]) / e - dg.boundary[q]));
        rep.interior_error.push_back(ei);
        rep.boundary_error.push_back(eb);
        combined.push_back(std::max(ei, eb));
    }
    if (eps.size() >= 3) rep.error_slope = fit_loglog_slope(eps, combined);
    return rep;
}

namespace detail {

template <class F>
double simpson(F&& f, double a, double b, int n = 1000)
{
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double sphere_measure(int N)
{
    // |S^{N-1}| = 2 pi^{N/2} / Gamma(N/2); |S^0| = 2 counts both ends of (-1, 1)
    return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / boost::math::tgamma(0.5 * N);
}

// integral over [0, 2pi)^m of omega_a omega_b (trapezoid rule, exact for trig polynomials)
inline double torus_inner(int m, int ka, int kb, int n = 256)
{
    double one = 0.0, ca = 0.0, cb = 0.0;
    const double dx = 2.0 * std::numbers::pi / n;
    for (int i = 0; i < n; ++i) {
        const double x = i * dx;
        one += std::cos(ka * x) * std::cos(kb * x) * dx;
        ca += std::cos(ka * x) * dx;
        cb += std::cos(kb * x) * dx;
    }
    const double L = 2.0 * std::numbers::pi;
    // sum_j sum_l int cos(ka x_j) cos(kb x_l)
    return m * one * std::pow(L, m - 1) + double(m) * (m - 1) * ca * cb * std::pow(L, m - 2);
}

} // namespace detail

struct TransversalityReport {
    double value;            // P(-v_*, 0) = -int v_*^2
    double radial_integral;  // int psi^2 over the reference cross-section
    double angular_integral; // int theta^2 over the torus
};

/// Pairing of the lambda-derivative direction (-v_*, 0) against the cokernel
/// element v_*, evaluated by quadrature.
inline TransversalityReport transversality_pairing(const BranchSetup& su)
{
    const auto& psi = su.kernel;
    double radial = 0.0;
    if (su.kind == ProblemKind::slab) {
        radial = detail::simpson([&](double t) { return psi(t) * psi(t); }, -1.0, 1.0);
    } else {
        const int N = su.dims.N;
        radial = detail::sphere_measure(N) *
                 detail::simpson([&](double r) { return psi(r) * psi(r) * std::pow(r, N - 1); }, 0.0, 1.0);
    }
    const double angular = detail::torus_inner(su.dims.m, 1, 1);
    return TransversalityReport{-radial * angular, radial, angular};
}

/// P(DG(0) U) for U = probe; vanishes for every U (range characterisation).
inline double range_pairing(const BranchSetup& su, const Probe& U)
{
    const int N = su.dims.N;
    const auto d = U.profile.derivative();
    const auto dd = d.derivative();
    const double k2 = double(U.k) * U.k;
    const auto& psi = su.kernel;
    auto w = [&](double r) {
        const auto v = detail::radial_values(U.profile, d, dd, r);
        return su.top * v.f + v.dd + (N - 1) * v.d_over_r - su.lambda * k2 * v.f;
    };
    const double bnd = d(1.0) + (N - 1) * U.profile(1.0);
    const double ang = detail::torus_inner(su.dims.m, U.k, 1);
    double interior = 0.0, boundary = 0.0;
    if (su.kind == ProblemKind::slab) {
        interior = detail::simpson([&](double t) { return w(t) * psi(t); }, -1.0, 1.0, 2000);
        boundary = 2.0 * bnd * psi(1.0); // both components, by oddness
    } else {
        const double S = detail::sphere_measure(N);
        interior = S * detail::simpson([&](double r) { return w(r) * psi(r) * std::pow(r, N - 1); }, 0.0, 1.0, 2000);
        boundary = S * bnd * psi(1.0);
    }
    return (interior - boundary) * ang;
}

struct EigenGridSpec {
    int n_r;
    int n_x;
};

struct EigenSample {
    double s;
    EigenGridSpec grid;
    double spacing;
    double eigenvalue;
    double residual;
    int iterations;
    double neumann_mean;
    double deviation;      // (max - mean) / |mean| of the Neumann data over angles
    double opposite_sign;  // max |plus + minus| (slab: outward values cancel)
};

struct EigenVerificationReport {
    ProblemKind kind;
    ProblemDims dims;
    double lambda;
    double target;
    std::vector<EigenSample> samples;   // (s, fine), (s, coarse) for each s
    std::vector<double> s_values;
    std::vector<double> extrapolated;   // Richardson-extrapolated deviation per s
    std::vector<double> ratios;         // extrapolated[i] / extrapolated[i+1]
};

namespace detail {

struct EigenProblem {
    GridKind grid_kind;
    int N;
    double lambda;
    double target;
    RadialExpr base;
};

inline EigenProblem eigen_problem(ProblemKind kind, const ProblemDims& dims)
{
    if (dims.m != 1) throw InvalidArgument("eigen verification: only m = 1 is supported");
    if (kind == ProblemKind::dirichlet) {
        const auto c = dirichlet_constants(dims);
        return {GridKind::cylinder, dims.N, c.lambda_n, c.j * c.j, dirichlet_base(dims.N, c.j)};
    }
    const auto c = slab_constants(dims.n);
    const double pi = std::numbers::pi;
    return {GridKind::slab_odd, 1, c.gamma_n, double(dims.n) * dims.n * pi * pi, slab_base(dims.n)};
}

inline DomainProfile reference_profile(ProblemKind kind, const ProblemDims& dims, double lambda, double s)
{
    const auto p = kind == ProblemKind::dirichlet ? cylinder_profile(dims, s) : slab_profile(dims.n, dims.m, s);
    return pulled_back_profile(p, lambda);
}

inline EigenSample eigen_sample(const EigenProblem& ep, const DomainProfile& H, double s, EigenGridSpec gs,
                                double tol)
{
    const TensorGrid grid(ep.grid_kind, gs.n_r, gs.n_x);
    const auto A = assemble_pulled_operator(H, ep.lambda, ep.N, grid);
    Eigen::VectorXd seed(grid.size());
    for (int i = 0; i < grid.n_radial(); ++i)
        for (int j = 0; j < grid.n_x(); ++j) seed[grid.index(i, j)] = ep.base(grid.radial_nodes()[i]);
    const auto res = solve_eigenpair_near(A, grid, ep.target, seed, tol);
    const auto nd = boundary_neumann(res.field, H, ep.lambda);
    double mean = 0.0, mx = -1e300, opp = 0.0;
    for (std::size_t j = 0; j < nd.plus.size(); ++j) {
        mean += nd.plus[j];
        mx = std::max(mx, nd.plus[j]);
        opp = std::max(opp, std::abs(nd.plus[j] + nd.minus[j]));
    }
    mean /= double(nd.plus.size());
    const double dev = (mx - mean) / std::abs(mean);
    return EigenSample{s, gs, grid.dr(), res.eigenvalue, res.residual, res.iterations, mean, dev,
                       ep.grid_kind == GridKind::cylinder ? 0.0 : opp};
}

} // namespace detail

/// Solves the pulled-back Dirichlet eigenproblem on the first-order profiles
/// for each s on a fine and a coarse grid, and Richardson-extrapolates the
/// Neumann deviation in the radial spacing.
inline EigenVerificationReport eigen_verification(ProblemKind kind, const ProblemDims& dims,
                                                  const std::vector<double>& s_values, EigenGridSpec fine,
                                                  EigenGridSpec coarse, double tol = 1e-7, int threads = 1)
{
    if (s_values.empty()) throw InvalidArgument("eigen verification: no s-values");
    const auto ep = detail::eigen_problem(kind, dims);
    EigenVerificationReport rep{kind, dims, ep.lambda, ep.target, {}, s_values, {}, {}};
    const std::size_t n = s_values.size();
    std::vector<EigenSample> samples(2 * n);
    detail::parallel_for(2 * n, threads, [&](std::size_t q) {
        const double s = s_values[q / 2];
        const auto H = detail::reference_profile(kind, dims, ep.lambda, s);
        samples[q] = detail::eigen_sample(ep, H, s, q % 2 ? coarse : fine, tol);
    });
    rep.samples = samples;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = samples[2 * i];
        const auto& c = samples[2 * i + 1];
        const double hf2 = f.spacing * f.spacing, hc2 = c.spacing * c.spacing;
        rep.extrapolated.push_back((f.deviation * hc2 - c.deviation * hf2) / (hc2 - hf2));
    }
    for (std::size_t i = 0; i + 1 < rep.extrapolated.size(); ++i)
        rep.ratios.push_back(rep.extrapolated[i] / rep.extrapolated[i + 1]);
    return rep;
}

struct FlatConvergenceReport {
    double target;
    std::vector<EigenGridSpec> grids;
    std::vector<double> errors; // |Lambda_h - target|
    std::vector<double> ratios; // errors[i] / errors[i+1]
};

/// Flat reference domain (s = 0): eigenvalue error under grid refinement.
inline FlatConvergenceReport flat_eigen_convergence(ProblemKind kind, const ProblemDims& dims,
                                                    const std::vector<EigenGridSpec>& grids, double tol = 1e-9)
{
    const auto ep = detail::eigen_problem(kind, dims);
    const auto H = detail::reference_profile(kind, dims, ep.lambda, 0.0);
    FlatConvergenceReport rep{ep.target, grids, {}, {}};
    for (const auto& g : grids) rep.errors.push_back(std::abs(detail::eigen_sample(ep, H, 0.0, g, tol).eigenvalue - ep.target));
    for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i) rep.ratios.push_back(rep.errors[i] / rep.errors[i + 1]);
    return rep;
}

} // namespace odbif
