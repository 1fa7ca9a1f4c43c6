#pragma once

#include <cstdint>

#include "levyfp/coefficient.hpp"
#include "levyfp/test_function.hpp"
#include "levyfp/triplet.hpp"

namespace levyfp {

/// Monte Carlo estimate with its standard error. Reproducible: the same seed
/// and parameters give a bit-identical mean regardless of thread count.
struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_paths = 0;
    std::uint64_t seed = 0;
};

struct SimConfig {
    double dt = 1e-3;
    double t_end = 1.0;          // absolute terminal time; the start time s is passed per call
    long n_paths = 100000;
    std::uint64_t seed = 0;
    bool antithetic = false;
};

/// One Euler-Maruyama path of dX = f dt + sigma dL from X_s = x, returning
/// X_{t_end}. Jump events arrive per atom as Poisson processes at exact
/// exponential times inside the step and apply sigma(X_{tau-}, tau) z using
/// the pre-jump state; compensated small jumps are folded into the drift via
/// effective_drift. Randomness comes from a counter-based stream keyed by
/// (seed, path_index).
double simulate_terminal(const SDEModel& model, const LevyTriplet& triplet, double x,
                         double s, const SimConfig& cfg, long path_index);

/// Sample mean and standard error of phi(X_{t_end}) over cfg.n_paths
/// independent paths. The reduction is a fixed pairwise tree over path
/// indices, so the result is independent of evaluation order and thread
/// count. With antithetic pairing the standard error is computed over
/// pair averages.
MCEstimate mc_expectation(const TestFunction& phi, const SDEModel& model,
                          const LevyTriplet& triplet, double x, double s,
                          const SimConfig& cfg, int n_threads = 1);

/// Dynkin rate estimate (E[phi(X_{s+dt})] - phi(x)) / dt, which tends to the
/// generator value at x as dt -> 0. The O(dt) bias is reported by the caller
/// alongside dt, not extrapolated away.
MCEstimate dynkin_rate(const TestFunction& phi, const SDEModel& model,
                       const LevyTriplet& triplet, double x, double s, double delta_t,
                       const SimConfig& cfg, int n_threads = 1);

/// Exact law of the counterexample dynamics (nu = delta_1, sigma = -x): each
/// jump sends the state to 0 and keeps it there, so
/// E[phi(X_t)] = e^{-t} phi(x) + (1 - e^{-t}) phi(0).
double counterexample_law(const TestFunction& phi, double x, double t);

} // namespace levyfp
