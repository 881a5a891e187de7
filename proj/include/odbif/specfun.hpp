#pragma once

// Bessel functions of the first kind, the rescaled I_nu(r) = r^{-nu} J_nu(r),
// and positive zeros of J_nu.

#include "odbif/errors.hpp"
#include "odbif/roots.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <sstream>
#include <vector>

namespace odbif {

/// Order of a Bessel function; restricted to nu > -1.
class BesselOrder {
public:
    explicit BesselOrder(double nu) : nu_(nu)
    {
        if (!(nu > -1.0)) {
            std::ostringstream msg;
            msg << "Bessel order must satisfy nu > -1, got " << nu;
            throw DomainError(msg.str());
        }
    }
    double value() const noexcept { return nu_; }

private:
    double nu_;
};

struct BesselZero {
    BesselOrder order;
    int index;
    double value;
    double residual;   // |J_nu(value)|
    double bracket_lo;
    double bracket_hi;
};

namespace detail {

// J of arbitrary real order (including nu <= -1) for internal recurrences.
inline double cyl_j(double nu, double x)
{
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0 || std::floor(nu) == nu) return 0.0;
    }
    return boost::math::cyl_bessel_j(nu, x);
}

// Ascending series of r^{-nu} J_nu(r); accurate for |r| <~ 2.
inline double i_nu_series(double nu, double r)
{
    const double q = -0.25 * r * r;
    double term = 1.0 / (std::pow(2.0, nu) * boost::math::tgamma(nu + 1.0));
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

inline constexpr double kSeriesRadius = 1.0;

} // namespace detail

/// J_nu(x) for x >= 0.
inline double bessel_j(BesselOrder nu, double x)
{
    if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be nonnegative");
    const double v = nu.value();
    if (x == 0.0 && v < 0.0) throw DomainError("bessel_j: J_nu(0) is unbounded for -1 < nu < 0");
    return detail::cyl_j(v, x);
}

/// dJ_nu/dx, via J'_nu = (nu/x) J_nu - J_{nu+1}.
inline double bessel_j_deriv(BesselOrder nu, double x)
{
    const double v = nu.value();
    if (!(x >= 0.0)) throw DomainError("bessel_j_deriv: argument must be nonnegative");
    if (x == 0.0) {
        if (v < 1.0 && v != 0.0) throw DomainError("bessel_j_deriv: derivative unbounded at 0");
        if (v == 0.0) return 0.0;
        return v == 1.0 ? 0.5 : 0.0;
    }
    return (v / x) * detail::cyl_j(v, x) - detail::cyl_j(v + 1.0, x);
}

/// I_nu(r) = r^{-nu} J_nu(r) for r > 0.
inline double i_nu(BesselOrder nu, double r)
{
    if (!(r > 0.0)) throw DomainError("i_nu: argument must be positive");
    const double v = nu.value();
    if (r <= detail::kSeriesRadius) return detail::i_nu_series(v, r);
    return std::pow(r, -v) * detail::cyl_j(v, r);
}

/// I'_nu(r) = -r^{-nu} J_{nu+1}(r) for r > 0.
inline double i_nu_deriv(BesselOrder nu, double r)
{
    if (!(r > 0.0)) throw DomainError("i_nu_deriv: argument must be positive");
    const double v = nu.value();
    if (r <= detail::kSeriesRadius) return -r * detail::i_nu_series(v + 1.0, r);
    return -std::pow(r, -v) * detail::cyl_j(v + 1.0, r);
}

/// I_nu extended to the whole real line as the even entire function
/// sum_k (-1)^k (r/2)^{2k} / (2^nu k! Gamma(nu+k+1)); I_nu(0) = 1/(2^nu Gamma(nu+1)).
inline double i_nu_total(BesselOrder nu, double r)
{
    const double a = std::abs(r);
    const double v = nu.value();
    if (a <= detail::kSeriesRadius) return detail::i_nu_series(v, a);
    return std::pow(a, -v) * detail::cyl_j(v, a);
}

/// First `count` positive zeros of J_nu. Brackets come from a forward scan
/// that counts sign changes from x = 0+, so no zero is skipped.
inline std::vector<BesselZero> bessel_zeros(BesselOrder nu, int count)
{
    if (count < 1) throw InvalidArgument("bessel_zeros: count must be >= 1");
    const double v = nu.value();
    // I_nu has the same positive zeros as J_nu and is O(1) near the origin.
    auto f = [v](double x) { return i_nu_total(BesselOrder(v), x); };

    std::vector<BesselZero> zeros;
    zeros.reserve(static_cast<std::size_t>(count));
    constexpr double step = 0.1; // consecutive zeros are more than 2 apart for nu > -1
    double a = 0.0;
    double fa = f(a);
    while (static_cast<int>(zeros.size()) < count) {
        const double b = a + step;
        const double fb = f(b);
        if (fb == 0.0 || std::signbit(fa) != std::signbit(fb)) {
            const double root = fb == 0.0 ? b : solve_bracketed(f, a, b, "bessel_zero");
            const double res = std::abs(detail::cyl_j(v, root));
            if (!(res < 1e-12)) {
                std::ostringstream msg;
                msg << "bessel_zero: residual " << res << " too large for nu=" << v
                    << " index " << zeros.size() + 1;
                throw NumericalError(msg.str(), a, b);
            }
            zeros.push_back(BesselZero{nu, static_cast<int>(zeros.size()) + 1, root, res, a, b});
            // step past an exact hit so it is not counted twice
            a = b;
            fa = fb == 0.0 ? f(b + 1e-9) : fb;
            continue;
        }
        a = b;
        fa = fb;
        if (a > 1e6) throw NumericalError("bessel_zero: scan ran past x = 1e6", a - step, a);
    }
    return zeros;
}

/// The index-th positive zero j_{nu,index} (index >= 1).
inline BesselZero bessel_zero(BesselOrder nu, int index)
{
    if (index < 1) throw InvalidArgument("bessel_zero: index must be >= 1");
    return bessel_zeros(nu, index).back();
}

} // namespace odbif
