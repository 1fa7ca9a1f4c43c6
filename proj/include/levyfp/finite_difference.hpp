#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace levyfp {

/// Central finite-difference k-th derivative for k <= 6 (Fornberg stencils,
/// accuracy order 6/6/4/4/2/2). Serves the second-class paths where no
/// analytic structure is available; precision is not certifiable beyond k = 6.
inline double fd_derivative(const std::function<double(double)>& fn, int k, double x) {
    if (k < 0) throw std::invalid_argument("fd_derivative: k must be >= 0");
    if (k > 6) throw std::invalid_argument("fd_derivative: capped at k = 6");
    if (k == 0) return fn(x);

    struct Stencil {
        int half;
        double c[7];
    };
    static const Stencil table[7] = {
        {0, {1.0}},
        {3, {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60}},
        {3, {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90}},
        {3, {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8}},
        {3, {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6}},
        {3, {-1.0 / 2, 2.0, -5.0 / 2, 0.0, 5.0 / 2, -2.0, 1.0 / 2}},
        {3, {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0}},
    };

    // Step chosen to balance the stencil's truncation order against rounding;
    // the rounding floor scales with the stencil's absolute coefficient mass.
    static const double coeff_mass[7] = {1.0, 1.867, 5.178, 5.5, 17.67, 10.0, 64.0};
    const double order = (k <= 2) ? 6.0 : (k <= 4 ? 4.0 : 2.0);
    const double scale = std::max(1.0, std::abs(x));
    const double h = scale * std::pow(coeff_mass[k] * 2.22e-16, 1.0 / (k + order));
    const Stencil& st = table[k];
    double sum = 0.0;
    for (int j = -st.half; j <= st.half; ++j) sum += st.c[j + st.half] * fn(x + j * h);
    return sum / std::pow(h, k);
}

} // namespace levyfp
