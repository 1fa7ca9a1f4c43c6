#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace levyfp {

/// One atom of the jump measure: weight w (events per unit time) at jump size z.
struct LevyAtom {
    double z;
    double w;
};

/// Levy triplet (b, A, nu) with nu a finite sum of weighted Dirac atoms.
class LevyTriplet {
public:
    LevyTriplet(double b, double A, std::vector<LevyAtom> atoms)
        : b_(b), A_(A), atoms_(std::move(atoms)) {
        if (!(A_ >= 0.0))
            throw std::invalid_argument("LevyTriplet: A must be >= 0");
        for (const auto& a : atoms_) {
            if (!(a.z != 0.0) || !std::isfinite(a.z))
                throw std::invalid_argument("LevyTriplet: atom jump size must be nonzero and finite");
            if (!(a.w > 0.0) || !std::isfinite(a.w))
                throw std::invalid_argument("LevyTriplet: atom weight must be positive and finite");
        }
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            for (std::size_t j = i + 1; j < atoms_.size(); ++j)
                if (atoms_[i].z == atoms_[j].z)
                    throw std::invalid_argument("LevyTriplet: atom jump sizes must be pairwise distinct");
    }

    double b() const { return b_; }
    double A() const { return A_; }
    const std::vector<LevyAtom>& atoms() const { return atoms_; }

    double total_rate() const {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.w;
        return s;
    }

private:
    double b_, A_;
    std::vector<LevyAtom> atoms_;
};

/// Drift of the Levy process after extracting compensated small jumps
/// (|z| < 1) as an ordinary compound-Poisson part: b - sum_{|z_j|<1} w_j z_j.
inline double effective_drift(const LevyTriplet& triplet) {
    double comp = 0.0;
    for (const auto& a : triplet.atoms())
        if (std::abs(a.z) < 1.0) comp += a.w * a.z;
    return triplet.b() - comp;
}

} // namespace levyfp
