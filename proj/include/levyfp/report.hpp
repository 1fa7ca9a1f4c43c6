#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "levyfp/coefficient.hpp"
#include "levyfp/density.hpp"
#include "levyfp/grid.hpp"
#include "levyfp/simulate.hpp"
#include "levyfp/test_function.hpp"
#include "levyfp/triplet.hpp"

namespace levyfp {

/// Configuration error with the offending line when known. CLI maps this to
/// exit status 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parsed experiment configuration: key = value lines under [section]
/// headers. Unknown sections or keys are rejected at parse time, as are
/// invalid numeric ranges (type constructors validate on the spot).
struct ExperimentConfig {
    std::string experiment;

    std::optional<LevyTriplet> triplet;
    std::optional<Coefficient> drift;
    std::optional<Coefficient> noise;
    std::optional<TestFunction> phi;
    std::optional<Grid> grid;

    // [series]
    int series_k_max = 100;
    double series_tol = 1e-10;
    bool require_converged = false;

    // [sim]
    SimConfig sim;

    // [density]
    struct DensityParams {
        double x0 = 0.0, s = 0.0, drift_rate = 0.0, A = 1.0, lambda = 0.0, jump_size = 0.0;
        std::optional<int> n_max;
    };
    std::optional<DensityParams> density;

    // [experiment]
    double x = 0.0, s = 0.0, t = 1.0, delta_t = 1e-3, z = 1.0;
    int K = 40;
    int growth_K = 20;

    std::vector<std::pair<std::string, std::string>> echo; // section.key = value, file order

    JumpDiffusionDensity make_density() const;

    static ExperimentConfig parse_string(const std::string& text);
    static ExperimentConfig parse_file(const std::string& path);
};

using Cell = std::variant<double, long, std::string>;

/// Machine-readable result of one experiment run.
struct ReportRecord {
    std::string experiment;
    std::string version;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> input_echo;
    std::vector<std::string> columns;
    std::vector<std::string> row_ops; // producing operation, one per row
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> verdicts;
    double wall_ms = 0.0; // informational; excluded from emitted bytes
    bool failed = false;
    std::string failure_reason;
};

/// Dispatch the configured experiment. Deterministic given the config
/// (including seed); wall_ms is the only field that varies between runs and
/// is never emitted.
ReportRecord run(const ExperimentConfig& config, int n_threads = 1);

enum class ReportFormat { json, csv };

/// Serialize: json is a single document with keys in fixed order and floats
/// as shortest round-trip decimals; csv is a header row plus one data row per
/// grid point or per k.
std::string emit(const ReportRecord& report, ReportFormat format);

/// Full command-line entry point; returns the process exit status
/// (0 success, 1 experiment failure, 2 configuration error).
int run_cli(int argc, const char* const* argv);

} // namespace levyfp
