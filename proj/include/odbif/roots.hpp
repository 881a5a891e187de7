#pragma once

#include "odbif/errors.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

namespace odbif {

/// Root of `f` inside [lo, hi]; `f(lo)` and `f(hi)` must differ in sign.
/// Polished to (nearly) full double precision with TOMS 748.
template <class F>
double solve_bracketed(F&& f, double lo, double hi, const std::string& what = "root")
{
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(std::signbit(flo) != std::signbit(fhi))) {
        std::ostringstream msg;
        msg << what << ": no sign change on [" << lo << ", " << hi << "] (f = " << flo << ", "
            << fhi << ")";
        throw NumericalError(msg.str(), lo, hi);
    }
    std::uintmax_t max_iter = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(52);
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, max_iter);
    if (max_iter >= 200) {
        std::ostringstream msg;
        msg << what << ": TOMS748 did not converge on [" << lo << ", " << hi << "]";
        throw NumericalError(msg.str(), a, b);
    }
    double fa = f(a);
    double fb = f(b);
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

} // namespace odbif
