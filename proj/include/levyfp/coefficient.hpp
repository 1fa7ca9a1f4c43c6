#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "levyfp/polynomial.hpp"

namespace levyfp {

enum class CoeffFamily { constant, time_only, linear, quadratic, general };

/// SDE coefficient g(x, t) with a declared structural family.
///
/// The poly families (constant, time_only, linear, quadratic) expose exact
/// x-polynomial coefficients at any time t, which the forward-equation
/// machinery needs for analytic derivatives. The general family only
/// evaluates pointwise.
class Coefficient {
public:
    static Coefficient constant(double c) {
        Coefficient g(CoeffFamily::constant);
        g.coeffs_at_ = [c](double) { return std::array<double, 3>{c, 0.0, 0.0}; };
        return g;
    }

    /// g(x, t) = c(t), constant in x.
    static Coefficient time_only(std::function<double(double)> c) {
        Coefficient g(CoeffFamily::time_only);
        g.coeffs_at_ = [c = std::move(c)](double t) {
            return std::array<double, 3>{c(t), 0.0, 0.0};
        };
        return g;
    }

    /// g(x, t) = slope*x + intercept.
    static Coefficient linear(double slope, double intercept) {
        Coefficient g(CoeffFamily::linear);
        g.coeffs_at_ = [=](double) { return std::array<double, 3>{intercept, slope, 0.0}; };
        return g;
    }

    /// g(x, t) = c2*x^2 + c1*x + c0.
    static Coefficient quadratic(double c2, double c1, double c0) {
        Coefficient g(CoeffFamily::quadratic);
        g.coeffs_at_ = [=](double) { return std::array<double, 3>{c0, c1, c2}; };
        return g;
    }

    /// Linear in x with time-dependent coefficients: g(x,t) = slope(t)*x + intercept(t).
    static Coefficient linear_t(std::function<double(double)> slope,
                                std::function<double(double)> intercept) {
        Coefficient g(CoeffFamily::linear);
        g.coeffs_at_ = [s = std::move(slope), i = std::move(intercept)](double t) {
            return std::array<double, 3>{i(t), s(t), 0.0};
        };
        return g;
    }

    static Coefficient general(std::function<double(double, double)> fn) {
        Coefficient g(CoeffFamily::general);
        g.fn_ = std::move(fn);
        return g;
    }

    double operator()(double x, double t) const {
        if (family_ == CoeffFamily::general) return fn_(x, t);
        const auto c = coeffs_at_(t);
        return (c[2] * x + c[1]) * x + c[0];
    }

    CoeffFamily family() const { return family_; }

    bool polynomial_in_x() const { return family_ != CoeffFamily::general; }

    /// x-polynomial coefficients {c0, c1, c2} at time t. Throws for general.
    std::array<double, 3> poly_coeffs(double t) const {
        if (!polynomial_in_x())
            throw std::invalid_argument("Coefficient: general family has no polynomial form");
        return coeffs_at_(t);
    }

    Polynomial poly_at(double t) const {
        const auto c = poly_coeffs(t);
        return Polynomial{c[0], c[1], c[2]};
    }

private:
    explicit Coefficient(CoeffFamily fam) : family_(fam) {}

    CoeffFamily family_;
    std::function<std::array<double, 3>(double)> coeffs_at_;
    std::function<double(double, double)> fn_;
};

/// Coefficients of dX_t = f(X_t,t) dt + sigma(X_{t-},t) dL_t.
struct SDEModel {
    Coefficient drift;
    Coefficient noise;
};

} // namespace levyfp
