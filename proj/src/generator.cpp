#include "levyfp/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace levyfp {

double exact_generator(const TestFunction& phi, const SDEModel& model,
                       const LevyTriplet& triplet, double x, double t) {
    const double sigma = model.noise(x, t);
    const double phi_x = phi(x);
    double sum = 0.0;
    double dphi = 0.0;
    bool have_dphi = false;
    for (const auto& atom : triplet.atoms()) {
        double contrib = phi(x + atom.z * sigma) - phi_x;
        if (std::abs(atom.z) < 1.0) {
            if (!have_dphi) {
                dphi = phi.derivative(1, x);
                have_dphi = true;
            }
            contrib -= atom.z * sigma * dphi;
        }
        sum += atom.w * contrib;
    }
    return sum;
}

SeriesEvaluation series_generator(const TestFunction& phi, const SDEModel& model,
                                  const LevyTriplet& triplet, double x, double t, int k_max,
                                  double tol) {
    if (!phi.builtin())
        throw std::invalid_argument(
            "series_generator: custom test functions lack arbitrary-order derivatives");
    const double sigma = model.noise(x, t);
    const auto& atoms = triplet.atoms();

    // One Taylor stream per atom, displacement h_j = z_j sigma. Terms are
    // aggregated per order k; small-jump atoms skip k = 1, where the
    // compensation term cancels their series term exactly.
    std::vector<TaylorTermStream> streams;
    streams.reserve(atoms.size());
    for (const auto& atom : atoms) streams.emplace_back(phi, x, atom.z * sigma);
    for (auto& st : streams) st.next(); // discard the k = 0 term

    double compensation = 0.0;
    SeriesAccumulator acc(k_max, tol);
    for (int k = 1; k <= k_max; ++k) {
        double term = 0.0;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            const double tj = streams[j].next();
            if (k == 1 && std::abs(atoms[j].z) < 1.0)
                compensation += atoms[j].w * tj;
            else
                term += atoms[j].w * tj;
        }
        if (!acc.push(term)) break;
    }
    SeriesEvaluation eval = acc.finish();
    eval.compensation = compensation;
    return eval;
}

double shift_taylor_gap(const TestFunction& phi, double x, double h, int K) {
    if (!phi.builtin())
        throw std::invalid_argument(
            "shift_taylor_gap: custom test functions lack arbitrary-order derivatives");
    if (K < 0) throw std::invalid_argument("shift_taylor_gap: K must be >= 0");
    TaylorTermStream stream(phi, x, h);
    stream.next(); // k = 0
    double partial = 0.0;
    for (int k = 1; k <= K; ++k) partial += stream.next();
    return std::abs(phi(x + h) - phi(x) - partial);
}

std::vector<OperatorComparison> counterexample_report(const Grid& x_grid, int k_max,
                                                      double tol) {
    const TestFunction phi = TestFunction::bump(0.0, 1.0);
    const SDEModel model{Coefficient::constant(0.0), Coefficient::linear(-1.0, 0.0)};
    const LevyTriplet triplet(0.0, 0.0, {{1.0, 1.0}});

    std::vector<OperatorComparison> rows;
    rows.reserve(x_grid.size());
    for (int i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid.point(i);
        OperatorComparison row;
        row.x = x;
        row.exact = exact_generator(phi, model, triplet, x, 0.0);
        row.series = series_generator(phi, model, triplet, x, 0.0, k_max, tol);
        row.gap = std::abs(row.exact - row.series.value());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace levyfp
