#pragma once

#include <memory>
#include <optional>
#include <vector>

namespace levyfp {

/// Closed-form Gaussian-Poisson mixture transition density of
///   dX = drift_rate dt + sqrt(A) dW + jump_size dN,   N a Poisson(lambda) process,
/// started at x0 at time s:
///   p(y,t) = sum_n e^{-lam tau}(lam tau)^n/n! N(y; x0 + drift_rate tau + n jump_size, A tau).
///
/// The Poisson sum is truncated at n_max; when n_max is not supplied it is the
/// smallest index with tail mass below 1e-15 at the evaluation time. The tail
/// is reported by tail_mass(), never silently dropped.
class JumpDiffusionDensity {
public:
    JumpDiffusionDensity(double x0, double s, double drift_rate, double A,
                         double lambda, double jump_size,
                         std::optional<int> n_max = std::nullopt);

    /// Density value p(y, t); requires t > s.
    double operator()(double y, double t) const;

    /// Analytic k-th y-derivative via the Hermite recursion per component.
    double dy(int k, double y, double t) const;

    /// Analytic t-derivative by term-wise differentiation of the Poisson
    /// weights and the Gaussian kernels.
    double dt(double y, double t) const;

    /// Poisson tail mass beyond the effective truncation index at time t.
    double tail_mass(double t) const;
    int effective_n_max(double t) const;

    double x0() const { return x0_; }
    double s() const { return s_; }
    double drift_rate() const { return mu_; }
    double A() const { return A_; }
    double lambda() const { return lambda_; }
    double jump_size() const { return jump_; }
    std::optional<int> n_max() const { return n_max_; }

private:
    friend class DensityTaylorStream;
    void check_time(double t) const;

    double x0_, s_, mu_, A_, lambda_, jump_;
    std::optional<int> n_max_;
};

/// Streams the scaled y-derivatives p^(k)(y,t)/k! for k = 0, 1, 2, ... in
/// O(components) per order; the forward-equation series consumes these.
class DensityTaylorStream {
public:
    DensityTaylorStream(const JumpDiffusionDensity& d, double y, double t);
    ~DensityTaylorStream();
    DensityTaylorStream(DensityTaylorStream&&) noexcept;
    DensityTaylorStream& operator=(DensityTaylorStream&&) noexcept;

    double next();
    int order() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace levyfp
