#include "levyfp/density.hpp"

#include <cmath>
#include <stdexcept>

namespace levyfp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kAutoTailTol = 1e-15;
constexpr int kMaxComponents = 2000;

// Poisson pmf via lgamma so large means do not underflow term by term.
double poisson_pmf(int n, double mean) {
    if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

double gaussian_pdf(double y, double mean, double var) {
    const double d = y - mean;
    return std::exp(-d * d / (2.0 * var)) / std::sqrt(kTwoPi * var);
}

double hermite(int k, double t) {
    double hm1 = 0.0, h = 1.0;
    for (int j = 0; j < k; ++j) {
        const double hn = 2.0 * t * h - 2.0 * j * hm1;
        hm1 = h;
        h = hn;
    }
    return h;
}

} // namespace

JumpDiffusionDensity::JumpDiffusionDensity(double x0, double s, double drift_rate, double A,
                                           double lambda, double jump_size,
                                           std::optional<int> n_max)
    : x0_(x0), s_(s), mu_(drift_rate), A_(A), lambda_(lambda), jump_(jump_size), n_max_(n_max) {
    if (!(A > 0.0))
        throw std::invalid_argument(
            "JumpDiffusionDensity: A must be > 0 for a density to exist");
    if (!(lambda >= 0.0))
        throw std::invalid_argument("JumpDiffusionDensity: lambda must be >= 0");
    if (n_max_ && *n_max_ < 0)
        throw std::invalid_argument("JumpDiffusionDensity: n_max must be >= 0");
}

void JumpDiffusionDensity::check_time(double t) const {
    if (!(t > s_))
        throw std::invalid_argument("JumpDiffusionDensity: requires t > s");
}

int JumpDiffusionDensity::effective_n_max(double t) const {
    if (n_max_) return *n_max_;
    check_time(t);
    const double mean = lambda_ * (t - s_);
    if (mean == 0.0) return 0;
    // Smallest n with tail < 1e-15; for large means start from a normal bound.
    int n = (mean > 30.0) ? static_cast<int>(mean + 12.0 * std::sqrt(mean)) : 0;
    double cdf = 0.0;
    for (int m = 0; m <= n; ++m) cdf += poisson_pmf(m, mean);
    while (1.0 - cdf >= kAutoTailTol && n < kMaxComponents) {
        ++n;
        cdf += poisson_pmf(n, mean);
    }
    return n;
}

double JumpDiffusionDensity::tail_mass(double t) const {
    check_time(t);
    const double mean = lambda_ * (t - s_);
    const int nmax = effective_n_max(t);
    double cdf = 0.0;
    for (int n = 0; n <= nmax; ++n) cdf += poisson_pmf(n, mean);
    return std::max(0.0, 1.0 - cdf);
}

double JumpDiffusionDensity::operator()(double y, double t) const {
    check_time(t);
    const double tau = t - s_;
    const double mean_jumps = lambda_ * tau;
    const double var = A_ * tau;
    const int nmax = effective_n_max(t);
    double sum = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        const double w = poisson_pmf(n, mean_jumps);
        sum += w * gaussian_pdf(y, x0_ + mu_ * tau + n * jump_, var);
    }
    return sum;
}

double JumpDiffusionDensity::dy(int k, double y, double t) const {
    if (k < 0) throw std::invalid_argument("JumpDiffusionDensity::dy: k must be >= 0");
    check_time(t);
    const double tau = t - s_;
    const double mean_jumps = lambda_ * tau;
    const double var = A_ * tau;
    const double root2v = std::sqrt(2.0 * var);
    const double sign = (k & 1) ? -1.0 : 1.0;
    const int nmax = effective_n_max(t);
    double sum = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        const double w = poisson_pmf(n, mean_jumps);
        const double mean = x0_ + mu_ * tau + n * jump_;
        const double th = (y - mean) / root2v;
        sum += w * hermite(k, th) * gaussian_pdf(y, mean, var);
    }
    return sign * sum / std::pow(root2v, k);
}

double JumpDiffusionDensity::dt(double y, double t) const {
    check_time(t);
    const double tau = t - s_;
    const double mean_jumps = lambda_ * tau;
    const double var = A_ * tau;
    const double root2v = std::sqrt(2.0 * var);
    const int nmax = effective_n_max(t);
    double sum = 0.0;
    double pmf_prev = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        const double pmf = poisson_pmf(n, mean_jumps);
        const double mean = x0_ + mu_ * tau + n * jump_;
        const double g = gaussian_pdf(y, mean, var);
        const double th = (y - mean) / root2v;
        const double g1 = -hermite(1, th) * g / root2v;
        const double g2 = hermite(2, th) * g / (2.0 * var);
        // d/dt of e^{-lam tau}(lam tau)^n/n! is lam (pmf_{n-1} - pmf_n); the
        // kernel moves with the drift and spreads with the heat term.
        sum += lambda_ * (pmf_prev - pmf) * g + pmf * (-mu_ * g1 + 0.5 * A_ * g2);
        pmf_prev = pmf;
    }
    return sum;
}

// ---------------------------------------------------------------------------

struct DensityTaylorStream::Impl {
    int k = 0;
    double root2v = 0.0;
    // Per component: weight * gaussian value, and the scaled Hermite pair
    // w_j = H_j(th)/j! * q^j with q = -1/sqrt(2v).
    std::vector<double> wg, th, w_prev, w_curr;
};

DensityTaylorStream::DensityTaylorStream(const JumpDiffusionDensity& d, double y, double t)
    : impl_(std::make_unique<Impl>()) {
    d.check_time(t);
    const double tau = t - d.s_;
    const double mean_jumps = d.lambda_ * tau;
    const double var = d.A_ * tau;
    impl_->root2v = std::sqrt(2.0 * var);
    const int nmax = d.effective_n_max(t);
    for (int n = 0; n <= nmax; ++n) {
        const double w = poisson_pmf(n, mean_jumps);
        const double mean = d.x0_ + d.mu_ * tau + n * d.jump_;
        impl_->wg.push_back(w * gaussian_pdf(y, mean, var));
        impl_->th.push_back((y - mean) / impl_->root2v);
        impl_->w_prev.push_back(0.0);
        impl_->w_curr.push_back(1.0);
    }
}

DensityTaylorStream::~DensityTaylorStream() = default;
DensityTaylorStream::DensityTaylorStream(DensityTaylorStream&&) noexcept = default;
DensityTaylorStream& DensityTaylorStream::operator=(DensityTaylorStream&&) noexcept = default;

int DensityTaylorStream::order() const { return impl_->k; }

double DensityTaylorStream::next() {
    Impl& s = *impl_;
    const int k = s.k++;
    const double q = -1.0 / s.root2v;
    double sum = 0.0;
    for (std::size_t n = 0; n < s.wg.size(); ++n) {
        sum += s.wg[n] * s.w_curr[n];
        const double w_next =
            (2.0 * s.th[n] * q * s.w_curr[n] - 2.0 * q * q * s.w_prev[n]) / (k + 1);
        s.w_prev[n] = s.w_curr[n];
        s.w_curr[n] = w_next;
    }
    return sum;
}

} // namespace levyfp
