#include "levyfp/fpe.hpp"

#include <cmath>
#include <stdexcept>

#include "levyfp/finite_difference.hpp"

namespace levyfp {

namespace {

constexpr double kBoundaryDecay = 1e-14;

void check_sigma(const Polynomial& sigma) {
    if (sigma.degree() > 2)
        throw std::invalid_argument("sigma polynomial must have degree <= 2");
}

// Streams zeta_k = (-z)^k/k! d^k/dy^k(sigma^k p)(y, t) for k = 0, 1, 2, ...
//
// Writing sigma(y+u) = a + b u + c u^2, the Taylor coefficients of sigma^k
// about y are the trinomial power T_k, and the scaled Leibniz rule gives
//   zeta_k = (-z)^k sum_{m=0}^{k} T_k[m] * (p^(k-m)/(k-m)!),
// so neither k! nor the raw derivatives are ever formed.
class FpeTermStream {
public:
    FpeTermStream(const JumpDiffusionDensity& p, const Polynomial& sigma, double z,
                  double y, double t)
        : ptay_stream_(p, y, t), z_(z) {
        check_sigma(sigma);
        a_ = sigma(y);
        b_ = sigma.derivative()(y);
        c_ = sigma.coeff(2);
        trinomial_ = {1.0};
        ptay_.reserve(64);
    }

    double next() {
        const int k = k_++;
        ptay_.push_back(ptay_stream_.next());
        if (k == 0) return ptay_[0];
        // T_k = T_{k-1} * (a + b u + c u^2)
        std::vector<double> next_t(trinomial_.size() + 2, 0.0);
        for (std::size_t m = 0; m < trinomial_.size(); ++m) {
            next_t[m] += a_ * trinomial_[m];
            next_t[m + 1] += b_ * trinomial_[m];
            next_t[m + 2] += c_ * trinomial_[m];
        }
        trinomial_ = std::move(next_t);
        zpow_ *= -z_;
        double sum = 0.0;
        const int mmax = std::min<int>(k, static_cast<int>(trinomial_.size()) - 1);
        for (int m = 0; m <= mmax; ++m) sum += trinomial_[m] * ptay_[k - m];
        return zpow_ * sum;
    }

private:
    DensityTaylorStream ptay_stream_;
    std::vector<double> ptay_;
    std::vector<double> trinomial_;
    double z_, a_ = 0.0, b_ = 0.0, c_ = 0.0;
    double zpow_ = 1.0;
    int k_ = 0;
};

double factorial(int k) {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

// d/dy (q(y) p(y,t)) for polynomial q: q' p + q p'.
double d1_poly_p(const Polynomial& q, const JumpDiffusionDensity& p, double y, double t) {
    return q.derivative()(y) * p(y, t) + q(y) * p.dy(1, y, t);
}

SeriesVerdict worse(SeriesVerdict a, SeriesVerdict b) {
    auto rank = [](SeriesVerdict v) {
        switch (v) {
            case SeriesVerdict::converged: return 0;
            case SeriesVerdict::not_converged_by_k: return 1;
            case SeriesVerdict::diverging: return 2;
        }
        return 2;
    };
    return rank(a) >= rank(b) ? a : b;
}

} // namespace

double deriv_sigma_k_p(const JumpDiffusionDensity& p, const Polynomial& sigma, int k,
                       double y, double t) {
    if (k < 0) throw std::invalid_argument("deriv_sigma_k_p: k must be >= 0");
    if (k > 170) throw std::invalid_argument("deriv_sigma_k_p: k above 170 overflows k!");
    check_sigma(sigma);
    // Recover the raw derivative from the scaled stream: the stream yields
    // (-z)^k/k! d^k(sigma^k p); with z = -1 the prefactor is 1/k!.
    FpeTermStream stream(p, sigma, -1.0, y, t);
    double scaled = 0.0;
    for (int j = 0; j <= k; ++j) scaled = stream.next();
    return scaled * factorial(k);
}

AdjointCheck adjoint_term_check(int k, double z, const Polynomial& sigma,
                                const JumpDiffusionDensity& p, const TestFunction& phi,
                                const Grid& grid, double t) {
    if (k < 1) throw std::invalid_argument("adjoint_term_check: k must be >= 1");
    check_sigma(sigma);

    const int n = grid.size();
    std::vector<double> lhs_vals(n), rhs_vals(n);
    for (int i = 0; i < n; ++i) {
        const double y = grid.point(i);
        // z^k/k! sigma^k phi^(k) = Taylor term of phi at y with displacement z*sigma(y).
        lhs_vals[i] = phi.taylor_term(k, y, z * sigma(y)) * p(y, t);
        FpeTermStream stream(p, sigma, z, y, t);
        double zeta = 0.0;
        for (int j = 0; j <= k; ++j) zeta = stream.next();
        rhs_vals[i] = zeta * phi(y);
    }

    for (int i : {0, n - 1}) {
        if (std::abs(lhs_vals[i]) >= kBoundaryDecay || std::abs(rhs_vals[i]) >= kBoundaryDecay)
            throw std::invalid_argument(
                "adjoint_term_check: integrands do not decay below 1e-14 at the grid "
                "boundaries; widen the grid");
    }

    AdjointCheck out;
    out.lhs = simpson(grid, lhs_vals);
    out.rhs = simpson(grid, rhs_vals);
    out.gap = std::abs(out.lhs - out.rhs);
    return out;
}

FpeRhsResult fpe_rhs(const JumpDiffusionDensity& p, const SDEModel& model,
                     const LevyTriplet& triplet, const Grid& grid, double t, int K,
                     double tol) {
    if (K < 1) throw std::invalid_argument("fpe_rhs: K must be >= 1");
    const bool poly_noise = model.noise.polynomial_in_x();
    const bool poly_drift = model.drift.polynomial_in_x();
    if (!poly_noise && K > 6)
        throw std::invalid_argument(
            "fpe_rhs: non-polynomial sigma limits the series to K <= 6 (finite differences)");

    const int n = grid.size();
    const double b = triplet.b();
    const double A = triplet.A();
    const auto& atoms = triplet.atoms();

    FpeRhsResult out;
    out.values.assign(n, 0.0);
    out.verdicts.assign(n, SeriesVerdict::converged);
    out.stacks.reserve(atoms.size());
    for (const auto& atom : atoms) {
        FPETermStack st;
        st.z = atom.z;
        st.w = atom.w;
        st.k_max = K;
        st.per_k.assign(K, std::vector<double>(n, 0.0));
        st.compensation.assign(n, 0.0);
        out.stacks.push_back(std::move(st));
    }

    Polynomial sigma_poly, rho_poly, sigma2_poly;
    if (poly_noise) {
        sigma_poly = model.noise.poly_at(t);
        check_sigma(sigma_poly);
        sigma2_poly = sigma_poly * sigma_poly;
        if (poly_drift) rho_poly = model.drift.poly_at(t) + sigma_poly * b;
    }

    for (int i = 0; i < n; ++i) {
        const double y = grid.point(i);
        const double pv = p(y, t);
        const double p1 = p.dy(1, y, t);
        const double p2 = p.dy(2, y, t);

        // -d(rho p)
        double drift_term;
        if (poly_noise && poly_drift) {
            drift_term = -(rho_poly.derivative()(y) * pv + rho_poly(y) * p1);
        } else {
            auto rho_p = [&](double yy) {
                return (model.drift(yy, t) + b * model.noise(yy, t)) * p(yy, t);
            };
            drift_term = -fd_derivative(rho_p, 1, y);
        }

        // (A/2) d^2(sigma^2 p)
        double diff_term = 0.0;
        if (A > 0.0) {
            if (poly_noise) {
                const double s2 = sigma2_poly(y);
                const double s2d = sigma2_poly.derivative()(y);
                const double s2dd = sigma2_poly.derivative().derivative()(y);
                diff_term = 0.5 * A * (s2dd * pv + 2.0 * s2d * p1 + s2 * p2);
            } else {
                auto s2p = [&](double yy) {
                    const double sg = model.noise(yy, t);
                    return sg * sg * p(yy, t);
                };
                diff_term = 0.5 * A * fd_derivative(s2p, 2, y);
            }
        }

        // Jump part, per atom.
        double jump_term = 0.0;
        SeriesVerdict verdict = SeriesVerdict::converged;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            const double z = atoms[j].z;
            const double w = atoms[j].w;
            double series_sum = 0.0;
            SeriesAccumulator acc(K, tol, /*stop_on_verdict=*/false);
            if (poly_noise) {
                FpeTermStream stream(p, sigma_poly, z, y, t);
                stream.next();
                for (int k = 1; k <= K; ++k) {
                    const double term = stream.next();
                    out.stacks[j].per_k[k - 1][i] = term;
                    series_sum += term;
                    acc.push(term);
                }
            } else {
                for (int k = 1; k <= K; ++k) {
                    auto sig_k_p = [&](double yy) {
                        return std::pow(model.noise(yy, t), k) * p(yy, t);
                    };
                    const double term = std::pow(-z, k) / factorial(k) *
                                        fd_derivative(sig_k_p, k, y);
                    out.stacks[j].per_k[k - 1][i] = term;
                    series_sum += term;
                    acc.push(term);
                }
            }
            verdict = worse(verdict, acc.finish().verdict);

            double comp = 0.0;
            if (std::abs(z) < 1.0) {
                if (poly_noise)
                    comp = z * d1_poly_p(sigma_poly, p, y, t);
                else {
                    auto sp = [&](double yy) { return model.noise(yy, t) * p(yy, t); };
                    comp = z * fd_derivative(sp, 1, y);
                }
            }
            out.stacks[j].compensation[i] = comp;
            jump_term += w * (series_sum + comp);
        }

        out.values[i] = drift_term + diff_term + jump_term;
        out.verdicts[i] = verdict;
    }
    return out;
}

FpeResidual fpe_residual(const JumpDiffusionDensity& p, const SDEModel& model,
                         const LevyTriplet& triplet, const Grid& grid, double t, int K,
                         double tol) {
    FpeRhsResult rhs = fpe_rhs(p, model, triplet, grid, t, K, tol);
    FpeResidual out;
    const int n = grid.size();
    out.dpdt.resize(n);
    out.per_point.resize(n);
    out.rhs = std::move(rhs.values);
    for (int i = 0; i < n; ++i) {
        out.dpdt[i] = p.dt(grid.point(i), t);
        out.per_point[i] = out.dpdt[i] - out.rhs[i];
        out.max_abs = std::max(out.max_abs, std::abs(out.per_point[i]));
    }
    return out;
}

SeriesEvaluation series_divergence_probe(const JumpDiffusionDensity& p,
                                         const Polynomial& sigma, double z, double y,
                                         double t, int k_max, double tol) {
    check_sigma(sigma);
    if (z == 0.0) {
        // Every term carries a power of z.
        SeriesAccumulator acc(k_max, tol);
        for (int k = 1; k <= k_max; ++k)
            if (!acc.push(0.0)) break;
        return acc.finish();
    }
    FpeTermStream stream(p, sigma, z, y, t);
    stream.next();
    SeriesAccumulator acc(k_max, tol);
    for (int k = 1; k <= k_max; ++k)
        if (!acc.push(stream.next())) break;
    return acc.finish();
}

namespace {

GrowthFit growth_fit_from(const std::function<double(int)>& sup_norm, int K) {
    if (K < 2 || K > 25)
        throw std::invalid_argument("derivative_growth_fit: K must be in [2, 25]");
    GrowthFit fit;
    fit.sup_norms.resize(K);
    fit.c_estimates.resize(K);
    for (int k = 1; k <= K; ++k) {
        const double g = sup_norm(k);
        fit.sup_norms[k - 1] = g;
        fit.c_estimates[k - 1] = (g > 0.0) ? std::pow(g, 1.0 / k) : 0.0;
    }
    fit.c_final = fit.c_estimates.back();
    // Bounded when the estimates are non-increasing over the last half of the
    // range, with 2% slack.
    fit.bounded_verdict = true;
    for (int idx = K / 2; idx + 1 < K; ++idx)
        if (fit.c_estimates[idx + 1] > fit.c_estimates[idx] * 1.02) {
            fit.bounded_verdict = false;
            break;
        }
    return fit;
}

} // namespace

GrowthFit derivative_growth_fit(const TestFunction& fn, const Grid& grid, int K) {
    if (!fn.builtin())
        throw std::invalid_argument(
            "derivative_growth_fit: custom functions lack certified high derivatives");
    return growth_fit_from(
        [&](int k) {
            if (auto exact = fn.derivative_sup_norm(k)) return *exact;
            double g = 0.0;
            for (int i = 0; i < grid.size(); ++i)
                g = std::max(g, std::abs(fn.derivative(k, grid.point(i))));
            return g;
        },
        K);
}

GrowthFit derivative_growth_fit(const JumpDiffusionDensity& p, double t, const Grid& grid,
                                int K) {
    return growth_fit_from(
        [&](int k) {
            double g = 0.0;
            for (int i = 0; i < grid.size(); ++i)
                g = std::max(g, std::abs(p.dy(k, grid.point(i), t)));
            return g;
        },
        K);
}

} // namespace levyfp
