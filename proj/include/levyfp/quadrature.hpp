#pragma once

#include <functional>
#include <span>
#include <stdexcept>

#include "levyfp/grid.hpp"

namespace levyfp {

/// Composite Simpson rule over a uniform grid; the point count must be odd.
/// Accumulation is in fixed index order, so results are deterministic.
inline double simpson(const Grid& grid, std::span<const double> values) {
    const int n = grid.size();
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("simpson: value count does not match grid");
    if (n % 2 == 0)
        throw std::invalid_argument("simpson: composite Simpson needs an odd point count");
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n - 1; i += 2) odd += values[i];
    for (int i = 2; i < n - 1; i += 2) even += values[i];
    return grid.spacing() / 3.0 * (values[0] + values[n - 1] + 4.0 * odd + 2.0 * even);
}

inline double simpson(const Grid& grid, const std::function<double(double)>& f) {
    std::vector<double> v(grid.size());
    for (int i = 0; i < grid.size(); ++i) v[i] = f(grid.point(i));
    return simpson(grid, v);
}

} // namespace levyfp
