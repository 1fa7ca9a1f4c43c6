#pragma once

#include <vector>

#include "levyfp/coefficient.hpp"
#include "levyfp/grid.hpp"
#include "levyfp/series.hpp"
#include "levyfp/test_function.hpp"
#include "levyfp/triplet.hpp"

namespace levyfp {

/// Side-by-side evaluation of the exact nonlocal operator and its truncated
/// series form at one point.
struct OperatorComparison {
    double x = 0.0;
    double exact = 0.0;
    SeriesEvaluation series;
    double gap = 0.0; // |exact - series.value()|
};

/// Exact jump generator: the nu-integral reduces to a finite sum over atoms,
///   sum_j w_j [phi(x + z_j sigma(x,t)) - phi(x) - 1{|z_j|<1} z_j sigma(x,t) phi'(x)].
double exact_generator(const TestFunction& phi, const SDEModel& model,
                       const LevyTriplet& triplet, double x, double t);

/// Truncated series form of the jump generator,
///   sum_j w_j [sum_{k=1}^K z_j^k/k! sigma^k phi^(k)(x) - 1{|z_j|<1} z_j sigma phi'(x)],
/// with K chosen by the adaptive stopping rule. For atoms inside (-1,1) the
/// compensation term cancels the k = 1 series term exactly; the cancelled
/// amount is reported in SeriesEvaluation::compensation. Requires a built-in
/// (non-custom) test function; k_max is capped at 170.
SeriesEvaluation series_generator(const TestFunction& phi, const SDEModel& model,
                                  const LevyTriplet& triplet, double x, double t, int k_max,
                                  double tol);

/// |phi(x+h) - phi(x) - sum_{k=1}^K h^k/k! phi^(k)(x)|: the discrepancy
/// between a shift and its truncated Taylor expansion.
double shift_taylor_gap(const TestFunction& phi, double x, double h, int K);

/// The packaged counterexample: nu = delta_1 (rate 1), sigma(x,t) = -x,
/// phi = bump(0,1), compared point by point over the grid. The exact operator
/// is phi(0) - phi(x); the series form vanishes identically outside the bump
/// support, so the gap column exhibits the inequivalence for |x| > 1.
std::vector<OperatorComparison> counterexample_report(const Grid& x_grid, int k_max,
                                                      double tol);

} // namespace levyfp
