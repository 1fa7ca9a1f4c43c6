#include "levyfp/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "levyfp/rng.hpp"

namespace levyfp {

namespace {

void validate(const SimConfig& cfg, double s) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be > 0");
    if (!(cfg.t_end > s)) throw std::invalid_argument("SimConfig: t_end must be > s");
    if (!(cfg.dt <= cfg.t_end - s))
        throw std::invalid_argument("SimConfig: dt must not exceed the horizon t_end - s");
    if (cfg.n_paths < 1) throw std::invalid_argument("SimConfig: n_paths must be >= 1");
}

// Deterministic pairwise reduction keyed by index order.
double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 16) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double run_path(const SDEModel& model, const LevyTriplet& triplet, double x, double s,
                const SimConfig& cfg, long path_index) {
    const bool antithetic = cfg.antithetic && (path_index & 1);
    const std::uint64_t stream =
        cfg.antithetic ? static_cast<std::uint64_t>(path_index / 2)
                       : static_cast<std::uint64_t>(path_index);
    PathRng rng(cfg.seed, stream, antithetic);

    const double b_eff = effective_drift(triplet);
    const double A = triplet.A();
    const auto& atoms = triplet.atoms();
    const std::size_t n_atoms = atoms.size();

    // Exponential clocks, one per atom, drawn in atom order.
    std::vector<double> next_arrival(n_atoms);
    for (std::size_t j = 0; j < n_atoms; ++j)
        next_arrival[j] = s + rng.exponential(atoms[j].w);

    double X = x;
    double t = s;
    const double t_end = cfg.t_end;

    auto advance_continuous = [&](double from, double to) {
        const double delta = to - from;
        if (delta <= 0.0) return;
        const double sig = model.noise(X, from);
        double incr = (model.drift(X, from) + b_eff * sig) * delta;
        if (A > 0.0) incr += sig * std::sqrt(A * delta) * rng.normal();
        X += incr;
    };

    while (t < t_end) {
        const double step_end = std::min(t + cfg.dt, t_end);
        // Jumps inside (t, step_end], earliest first, at exact arrival times.
        for (;;) {
            std::size_t jmin = n_atoms;
            double tmin = step_end;
            for (std::size_t j = 0; j < n_atoms; ++j)
                if (next_arrival[j] <= tmin) {
                    tmin = next_arrival[j];
                    jmin = j;
                }
            if (jmin == n_atoms) break;
            advance_continuous(t, tmin);
            // Pre-jump left limit multiplies the noise intensity.
            X += model.noise(X, tmin) * atoms[jmin].z;
            t = tmin;
            next_arrival[jmin] = tmin + rng.exponential(atoms[jmin].w);
        }
        advance_continuous(t, step_end);
        t = step_end;
        if (!std::isfinite(X))
            throw std::runtime_error("simulate_terminal: state became non-finite at t = " +
                                     std::to_string(t) + " on path " +
                                     std::to_string(path_index) + " (overflow)");
    }
    return X;
}

} // namespace

double simulate_terminal(const SDEModel& model, const LevyTriplet& triplet, double x,
                         double s, const SimConfig& cfg, long path_index) {
    validate(cfg, s);
    if (path_index < 0 || path_index >= cfg.n_paths)
        throw std::invalid_argument("simulate_terminal: path_index out of range");
    return run_path(model, triplet, x, s, cfg, path_index);
}

MCEstimate mc_expectation(const TestFunction& phi, const SDEModel& model,
                          const LevyTriplet& triplet, double x, double s,
                          const SimConfig& cfg, int n_threads) {
    validate(cfg, s);
    if (cfg.n_paths < 2)
        throw std::invalid_argument("mc_expectation: need n_paths >= 2 for a standard error");
    if (cfg.antithetic && (cfg.n_paths % 2) != 0)
        throw std::invalid_argument("mc_expectation: antithetic pairing needs even n_paths");

    const long n = cfg.n_paths;
    std::vector<double> values(static_cast<std::size_t>(n));

    const int workers = std::max(1, n_threads);
    auto fill = [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i)
            values[static_cast<std::size_t>(i)] = phi(run_path(model, triplet, x, s, cfg, i));
    };
    if (workers == 1) {
        fill(0, n);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        const long chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long lo = w * chunk;
            const long hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w] {
                try {
                    fill(lo, hi);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    // With antithetic pairing the independent samples are the pair averages.
    std::vector<double> samples;
    if (cfg.antithetic) {
        samples.resize(static_cast<std::size_t>(n / 2));
        for (long m = 0; m < n / 2; ++m)
            samples[static_cast<std::size_t>(m)] =
                0.5 * (values[static_cast<std::size_t>(2 * m)] +
                       values[static_cast<std::size_t>(2 * m + 1)]);
    } else {
        samples = std::move(values);
    }

    const std::size_t m = samples.size();
    // A deterministic path gives identical samples; their mean is that value
    // and the dispersion is exactly zero, with no summation rounding.
    bool all_equal = true;
    for (std::size_t i = 1; i < m && all_equal; ++i) all_equal = samples[i] == samples[0];
    if (all_equal) return MCEstimate{samples[0], 0.0, cfg.n_paths, cfg.seed};

    const double mean = pairwise_sum(samples, 0, m) / static_cast<double>(m);
    std::vector<double> sq(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double d = samples[i] - mean;
        sq[i] = d * d;
    }
    const double ss = pairwise_sum(sq, 0, m);
    const double std_error =
        (m >= 2) ? std::sqrt(ss / (static_cast<double>(m) * (static_cast<double>(m) - 1.0)))
                 : 0.0;

    return MCEstimate{mean, std_error, cfg.n_paths, cfg.seed};
}

MCEstimate dynkin_rate(const TestFunction& phi, const SDEModel& model,
                       const LevyTriplet& triplet, double x, double s, double delta_t,
                       const SimConfig& cfg, int n_threads) {
    if (!(delta_t > 0.0)) throw std::invalid_argument("dynkin_rate: delta_t must be > 0");
    SimConfig local = cfg;
    local.t_end = s + delta_t;
    local.dt = std::min(cfg.dt, delta_t);
    const MCEstimate est = mc_expectation(phi, model, triplet, x, s, local, n_threads);
    return MCEstimate{(est.mean - phi(x)) / delta_t, est.std_error / delta_t, est.n_paths,
                      est.seed};
}

double counterexample_law(const TestFunction& phi, double x, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("counterexample_law: t must be >= 0");
    const double decay = std::exp(-t);
    return decay * phi(x) + (1.0 - decay) * phi(0.0);
}

} // namespace levyfp
