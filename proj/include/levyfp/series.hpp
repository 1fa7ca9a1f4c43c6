#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace levyfp {

enum class SeriesVerdict { converged, not_converged_by_k, diverging };

inline const char* to_string(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::converged: return "converged";
        case SeriesVerdict::not_converged_by_k: return "not-converged-by-K";
        case SeriesVerdict::diverging: return "diverging";
    }
    return "?";
}

/// Record of a truncated series evaluation: per-term values, partial sums,
/// the index actually used, and the convergence verdict.
struct SeriesEvaluation {
    std::vector<double> terms;        // terms[i] is the term of order k = i+1
    std::vector<double> partial_sums; // S_1 .. S_{K_used}
    int K_used = 0;
    bool converged = false;
    double tail_estimate = std::numeric_limits<double>::quiet_NaN();
    SeriesVerdict verdict = SeriesVerdict::not_converged_by_k;
    double compensation = 0.0;        // small-jump compensation subtracted from the sum

    double value() const { return partial_sums.empty() ? 0.0 : partial_sums.back(); }
};

/// Shared stopping rule for the operator and forward-equation series.
///
/// Converged: smallest K >= 8 with |term_K| < tol, |term_{K-1}| < tol and
/// geometric tail estimate |term_K| r/(1-r) < tol, where
/// r = |term_K/term_{K-1}| < 1. Two consecutive small terms are required
/// because parity-symmetric series (a Gaussian expanded at its center) have
/// every other term exactly zero; a lone zero certifies nothing. Diverging:
/// ten consecutive term ratios above 1.5 (or a non-finite term). Otherwise
/// not-converged-by-K at k_max.
///
/// The strike count must tolerate the transient growth hump of entire-series
/// terms (a Gaussian's terms grow until k is about 2 (h/sqrt(b))^2 with
/// oscillating ratios; observed runs above 1.5 reach five in a row), while a
/// genuinely divergent Taylor tail keeps its ratio above the radius quotient
/// for good, so persistence over ten orders separates the two.
///
/// With stop_on_verdict = false the accumulator consumes all k_max terms and
/// only records the verdict, which is what a fixed-truncation evaluation wants.
class SeriesAccumulator {
public:
    static constexpr int kDivergenceStrikes = 10;

    SeriesAccumulator(int k_max, double tol, bool stop_on_verdict = true)
        : k_max_(k_max), tol_(tol), stop_on_verdict_(stop_on_verdict) {
        if (k_max < 1) throw std::invalid_argument("SeriesAccumulator: k_max must be >= 1");
        if (k_max > 170)
            throw std::invalid_argument("SeriesAccumulator: k_max above 170 overflows k!");
        eval_.terms.reserve(k_max);
        eval_.partial_sums.reserve(k_max);
    }

    /// Feed the term of order k (k = 1, 2, ... in order). Returns true while
    /// more terms are wanted.
    bool push(double term) {
        const int k = static_cast<int>(eval_.terms.size()) + 1;
        const double prev_sum = eval_.partial_sums.empty() ? 0.0 : eval_.partial_sums.back();
        eval_.terms.push_back(term);
        eval_.partial_sums.push_back(prev_sum + term);
        eval_.K_used = k;

        if (!std::isfinite(term)) {
            decided_ = true;
            eval_.verdict = SeriesVerdict::diverging;
            return !stop_on_verdict_ && k < k_max_;
        }

        const double mag = std::abs(term);
        const double prev_mag = (k >= 2) ? std::abs(eval_.terms[k - 2])
                                         : std::numeric_limits<double>::infinity();
        double ratio = 0.0;
        if (k >= 2) {
            if (prev_mag > 0.0)
                ratio = mag / prev_mag;
            else
                ratio = (mag > 0.0) ? std::numeric_limits<double>::infinity() : 0.0;
            growth_strikes_ = (ratio > 1.5) ? growth_strikes_ + 1 : 0;
            if (!decided_ && growth_strikes_ >= kDivergenceStrikes) {
                decided_ = true;
                eval_.verdict = SeriesVerdict::diverging;
                return !stop_on_verdict_ && k < k_max_;
            }
        }

        if (!decided_ && k >= 8 && mag < tol_ && prev_mag < tol_) {
            const double tail = (mag == 0.0) ? 0.0
                                : (ratio < 1.0) ? mag * ratio / (1.0 - ratio)
                                                : std::numeric_limits<double>::infinity();
            if (tail < tol_) {
                decided_ = true;
                eval_.converged = true;
                eval_.verdict = SeriesVerdict::converged;
                eval_.tail_estimate = tail;
                return !stop_on_verdict_ && k < k_max_;
            }
        }
        last_ratio_ = ratio;
        return k < k_max_ && !(decided_ && stop_on_verdict_);
    }

    SeriesEvaluation finish() {
        if (!decided_) {
            eval_.verdict = SeriesVerdict::not_converged_by_k;
            if (!eval_.terms.empty() && last_ratio_ < 1.0)
                eval_.tail_estimate =
                    std::abs(eval_.terms.back()) * last_ratio_ / (1.0 - last_ratio_);
        }
        return std::move(eval_);
    }

private:
    int k_max_;
    double tol_;
    bool stop_on_verdict_;
    SeriesEvaluation eval_;
    int growth_strikes_ = 0;
    bool decided_ = false;
    double last_ratio_ = std::numeric_limits<double>::quiet_NaN();
};

} // namespace levyfp
