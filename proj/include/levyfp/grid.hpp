#pragma once

#include <stdexcept>
#include <vector>

namespace levyfp {

/// Uniform grid of n points on [lo, hi], h = (hi - lo)/(n - 1).
class Grid {
public:
    Grid(double lo, double hi, int n) : lo_(lo), hi_(hi), n_(n) {
        if (!(lo < hi))
            throw std::invalid_argument("Grid: lo must be < hi");
        if (n < 3)
            throw std::invalid_argument("Grid: need at least 3 points");
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    int size() const { return n_; }
    double spacing() const { return (hi_ - lo_) / (n_ - 1); }

    /// i-th point; endpoints are exact.
    double point(int i) const {
        if (i == 0) return lo_;
        if (i == n_ - 1) return hi_;
        return lo_ + i * spacing();
    }

    std::vector<double> points() const {
        std::vector<double> p(n_);
        for (int i = 0; i < n_; ++i) p[i] = point(i);
        return p;
    }

private:
    double lo_, hi_;
    int n_;
};

} // namespace levyfp
