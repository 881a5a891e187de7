#pragma once

// Finite sums  sum_i c_i r^{p_i} I_{nu_i}(a_i r)  with exact derivatives.
//
// Every radial profile used by the bifurcation fields (Bessel eigenfunctions,
// r U'(r) corrections, sin/cos in the slab) has this form, and the class is
// closed under d/dr because  d/dr I_nu(a r) = -a^2 r I_{nu+1}(a r).
// Since I_nu is even, r^p I_nu(a r) has parity (-1)^p and can be evaluated on
// the whole line, including r = 0.

#include "odbif/errors.hpp"
#include "odbif/specfun.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace odbif {

struct RadialTerm {
    double coef;
    int power;
    double order;
    double scale;
};

class RadialExpr {
public:
    RadialExpr() = default;
    explicit RadialExpr(std::vector<RadialTerm> terms) : terms_(std::move(terms)) {}

    /// c * I_nu(a r)
    static RadialExpr bessel(double nu, double a, double c = 1.0)
    {
        return RadialExpr({RadialTerm{c, 0, nu, a}});
    }
    /// c * sin(a r) = c sqrt(pi/2) a r I_{1/2}(a r)
    static RadialExpr sine(double a, double c = 1.0)
    {
        return RadialExpr({RadialTerm{c * std::sqrt(std::numbers::pi / 2.0) * a, 1, 0.5, a}});
    }
    /// c * cos(a r) = c sqrt(pi/2) I_{-1/2}(a r)
    static RadialExpr cosine(double a, double c = 1.0)
    {
        return RadialExpr({RadialTerm{c * std::sqrt(std::numbers::pi / 2.0), 0, -0.5, a}});
    }
    /// c * r^p
    static RadialExpr monomial(int p, double c = 1.0)
    {
        // I_{-1/2}(0 r) * sqrt(pi/2) = 1
        return RadialExpr({RadialTerm{c * std::sqrt(std::numbers::pi / 2.0), p, -0.5, 0.0}});
    }

    const std::vector<RadialTerm>& terms() const noexcept { return terms_; }

    double operator()(double r) const
    {
        double sum = 0.0;
        for (const auto& t : terms_) {
            if (t.coef == 0.0) continue;
            if (t.power < 0 && r == 0.0) throw DomainError("RadialExpr: negative power at r = 0");
            sum += t.coef * ipow(r, t.power) * i_nu_total(BesselOrder(t.order), t.scale * r);
        }
        return sum;
    }

    RadialExpr derivative() const
    {
        std::vector<RadialTerm> out;
        out.reserve(2 * terms_.size());
        for (const auto& t : terms_) {
            if (t.power != 0) out.push_back({t.coef * t.power, t.power - 1, t.order, t.scale});
            if (t.scale != 0.0)
                out.push_back({-t.coef * t.scale * t.scale, t.power + 1, t.order + 1.0, t.scale});
        }
        return RadialExpr(std::move(out));
    }

    RadialExpr times_r(int k = 1) const
    {
        auto out = terms_;
        for (auto& t : out) t.power += k;
        return RadialExpr(std::move(out));
    }

    /// Exact as long as every resulting power is >= 0 wherever it is evaluated at 0.
    RadialExpr divide_by_r() const { return times_r(-1); }

    RadialExpr scaled(double c) const
    {
        auto out = terms_;
        for (auto& t : out) t.coef *= c;
        return RadialExpr(std::move(out));
    }

    friend RadialExpr operator+(const RadialExpr& a, const RadialExpr& b)
    {
        auto out = a.terms_;
        out.insert(out.end(), b.terms_.begin(), b.terms_.end());
        return RadialExpr(std::move(out));
    }
    friend RadialExpr operator-(const RadialExpr& a, const RadialExpr& b) { return a + b.scaled(-1.0); }
    friend RadialExpr operator*(double c, const RadialExpr& a) { return a.scaled(c); }

private:
    static double ipow(double r, int p)
    {
        if (p >= 0) {
            double v = 1.0;
            for (int i = 0; i < p; ++i) v *= r;
            return v;
        }
        return 1.0 / ipow(r, -p);
    }

    std::vector<RadialTerm> terms_;
};

} // namespace odbif
